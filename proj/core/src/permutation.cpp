#include "rpluq/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rpluq/errors.hpp"

namespace rpluq {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) throw UsageError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t s) {
  Permutation p;
  p.map_.resize(s);
  std::iota(p.map_.begin(), p.map_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::transposition(std::size_t s, std::size_t k, std::size_t l) {
  if (k >= s || l >= s) throw UsageError("transposition index out of range");
  Permutation p = identity(s);
  std::swap(p.map_[k], p.map_[l]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) p.map_[map_[i]] = i;
  return p;
}

DenseMatrix Permutation::to_matrix(std::uint32_t modulus) const {
  DenseMatrix m(size(), size(), modulus);
  for (std::size_t i = 0; i < size(); ++i) m(i, map_[i]) = 1;
  return m;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) os << ' ';
    os << map_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text, std::size_t expected_size) {
  std::istringstream is(text);
  std::vector<std::size_t> map;
  std::string tok;
  while (is >> tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw ParseError("bad permutation entry '" + tok + "'");
    }
    map.push_back(std::stoull(tok));
  }
  if (map.size() != expected_size) {
    throw ParseError("permutation has " + std::to_string(map.size()) + " entries, expected " +
                     std::to_string(expected_size));
  }
  try {
    return Permutation(std::move(map));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw UsageError("compose: size mismatch");
  std::vector<std::size_t> map(a.size());
  // Mat(a)Mat(b) has its one in row i at column b(a(i)).
  for (std::size_t i = 0; i < a.size(); ++i) map[i] = b(a(i));
  return Permutation(std::move(map));
}

Permutation block_diag(std::span<const Permutation> parts) {
  std::vector<std::size_t> map;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) map.push_back(offset + p(i));
    offset += p.size();
  }
  return Permutation(std::move(map));
}

Permutation block_diag(const Permutation& a, const Permutation& b) {
  const Permutation parts[] = {a, b};
  return block_diag(parts);
}

Permutation embed(const Permutation& a, std::size_t offset, std::size_t total) {
  if (offset > total || a.size() > total - offset) throw UsageError("embed: does not fit");
  const Permutation parts[] = {Permutation::identity(offset), a,
                               Permutation::identity(total - offset - a.size())};
  return block_diag(parts);
}

void swap_rows(MatrixView a, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(a.row(i), a.row(i) + a.cols(), a.row(j));
}

void swap_cols(MatrixView a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

namespace {

// new[i] = old[sigma(i)] on rows.
void gather_rows(MatrixView a, const Permutation& sigma) {
  std::vector<bool> done(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (done[start]) continue;
    done[start] = true;
    std::size_t j = start;
    while (sigma(j) != start) {
      swap_rows(a, j, sigma(j));
      j = sigma(j);
      done[j] = true;
    }
  }
}

// new[sigma(i)] = old[i] on rows.
void scatter_rows(MatrixView a, const Permutation& sigma) {
  std::vector<bool> done(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (done[start]) continue;
    done[start] = true;
    for (std::size_t j = sigma(start); j != start; j = sigma(j)) {
      swap_rows(a, start, j);
      done[j] = true;
    }
  }
}

// new col j = old col src[j], row by row through one buffer.
void gather_cols(MatrixView a, std::span<const std::size_t> src) {
  std::vector<Residue> buf(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Residue* row = a.row(r);
    for (std::size_t j = 0; j < a.cols(); ++j) buf[j] = row[src[j]];
    std::copy(buf.begin(), buf.end(), row);
  }
}

void check_size(std::size_t have, std::size_t want, const char* what) {
  if (have != want) {
    throw UsageError(std::string(what) + ": permutation of size " + std::to_string(have) +
                     " applied to dimension " + std::to_string(want));
  }
}

}  // namespace

void apply_rows(MatrixView a, const Permutation& sigma) {
  check_size(sigma.size(), a.rows(), "apply_rows");
  if (a.cols() == 0) return;
  gather_rows(a, sigma);
}

void apply_rows_inverse(MatrixView a, const Permutation& sigma) {
  check_size(sigma.size(), a.rows(), "apply_rows_inverse");
  if (a.cols() == 0) return;
  scatter_rows(a, sigma);
}

void apply_cols(MatrixView a, const Permutation& sigma) {
  check_size(sigma.size(), a.cols(), "apply_cols");
  if (a.rows() == 0 || sigma.is_identity()) return;
  gather_cols(a, sigma.inverse().map());
}

void apply_cols_inverse(MatrixView a, const Permutation& sigma) {
  check_size(sigma.size(), a.cols(), "apply_cols_inverse");
  if (a.rows() == 0 || sigma.is_identity()) return;
  gather_cols(a, sigma.map());
}

}  // namespace rpluq
