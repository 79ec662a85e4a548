#include "rpluq/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "rpluq/errors.hpp"

namespace rpluq {

namespace {

std::string next_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError(std::string("unexpected end of input: ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::uint64_t> parse_uints(const std::string& line) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
      throw ParseError("not a non-negative integer in line: '" + line + "'");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

DenseMatrix read_body(std::istream& is, std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (p < 2 || p >= PrimeField::kHardMaxModulus || !PrimeField::is_prime(p)) {
    throw ParseError("modulus " + std::to_string(p) + " is not a supported prime");
  }
  DenseMatrix a(m, n, static_cast<std::uint32_t>(p));
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = parse_uints(next_line(is, "matrix row"));
    if (row.size() != n) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] >= p) {
        throw ParseError("entry " + std::to_string(row[j]) + " at (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is not a residue modulo " + std::to_string(p));
      }
      a(i, j) = static_cast<Residue>(row[j]);
    }
  }
  return a;
}

}  // namespace

void write_matrix(std::ostream& os, const DenseMatrix& a) {
  os << a.rows() << ' ' << a.cols() << ' ' << a.modulus() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a(i, j);
    }
    os << '\n';
  }
}

DenseMatrix read_matrix(std::istream& is) {
  const auto head = parse_uints(next_line(is, "matrix header"));
  if (head.size() != 3) throw ParseError("matrix header must be 'm n p'");
  return read_body(is, head[0], head[1], head[2]);
}

void write_factors(std::ostream& os, const PluqFactors& f) {
  os << f.rows() << ' ' << f.cols() << ' ' << f.modulus() << ' ' << f.rank << '\n';
  os << f.P.to_string() << '\n';
  os << f.Q.to_string() << '\n';
  write_matrix(os, f.packed);
}

PluqFactors read_factors(std::istream& is) {
  const auto head = parse_uints(next_line(is, "factor header"));
  if (head.size() != 4) throw ParseError("factor header must be 'm n p r'");
  PluqFactors f;
  f.P = Permutation::parse(next_line(is, "P"), head[0]);
  f.Q = Permutation::parse(next_line(is, "Q"), head[1]);
  f.packed = read_matrix(is);
  if (f.packed.rows() != head[0] || f.packed.cols() != head[1] ||
      f.packed.modulus() != head[2]) {
    throw ParseError("packed matrix header disagrees with factor header");
  }
  if (head[3] > std::min(head[0], head[1])) throw ParseError("rank exceeds min(m, n)");
  f.rank = head[3];
  return f;
}

std::string to_text(const DenseMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

DenseMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace rpluq
