#include "rpluq/kernels.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "rpluq/errors.hpp"

namespace rpluq {

namespace {

// Column tile width: keeps a k x kTile panel of B hot while sweeping rows of C.
constexpr std::size_t kTile = 256;

void reduce_all(std::uint64_t* acc, std::size_t w, std::uint32_t p) {
  for (std::size_t j = 0; j < w; ++j) acc[j] %= p;
}

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

void ClassicalKernels::mm_acc(const PrimeField& f, MatrixView c, ConstMatrixView a,
                              ConstMatrixView b, OpCounts& counts) const {
  const std::size_t m = c.rows(), n = c.cols(), k = a.cols();
  if (a.rows() != m || b.rows() != k || b.cols() != n) {
    throw UsageError("mm_acc: C " + dims(m, n) + ", A " + dims(a.rows(), k) + ", B " +
                     dims(b.rows(), b.cols()));
  }
  if (k == 0 || m == 0 || n == 0) return;

  const std::uint32_t p = f.modulus();
  const std::uint64_t bound = f.accumulation_bound();
  std::vector<std::uint64_t> acc(std::min(n, kTile));
  for (std::size_t jb = 0; jb < n; jb += kTile) {
    const std::size_t w = std::min(kTile, n - jb);
    for (std::size_t i = 0; i < m; ++i) {
      std::fill_n(acc.begin(), w, 0);
      const Residue* arow = a.row(i);
      std::uint64_t pending = 0;
      for (std::size_t l = 0; l < k; ++l) {
        if (pending == bound) {
          reduce_all(acc.data(), w, p);
          pending = 0;
        }
        ++pending;
        const std::uint64_t x = arow[l];
        if (x == 0) continue;
        const Residue* brow = b.row(l) + jb;
        for (std::size_t j = 0; j < w; ++j) acc[j] += x * brow[j];
      }
      Residue* crow = c.row(i) + jb;
      for (std::size_t j = 0; j < w; ++j) crow[j] = f.sub(crow[j], f.reduce(acc[j]));
    }
  }
  const std::uint64_t chunks = (k + bound - 1) / bound;
  counts.field_mul += std::uint64_t{m} * n * k;
  counts.field_add += std::uint64_t{m} * n * k;
  counts.modular_reductions += reductions_mm(m, k, n) * chunks;
}

void ClassicalKernels::trsm_left_unit_lower(const PrimeField& f, ConstMatrixView l, MatrixView b,
                                            OpCounts& counts) const {
  const std::size_t r = l.rows(), n = b.cols();
  if (l.cols() != r || b.rows() != r) {
    throw UsageError("trsm_left_unit_lower: L " + dims(r, l.cols()) + ", B " +
                     dims(b.rows(), n));
  }
  if (r == 0 || n == 0) return;

  const std::uint32_t p = f.modulus();
  const std::uint64_t bound = f.accumulation_bound();
  std::vector<std::uint64_t> acc(std::min(n, kTile));
  std::uint64_t extra = 0;
  for (std::size_t jb = 0; jb < n; jb += kTile) {
    const std::size_t w = std::min(kTile, n - jb);
    for (std::size_t i = 1; i < r; ++i) {
      Residue* brow = b.row(i) + jb;
      // acc holds the subtracted sum; the row value itself is combined at the end.
      std::fill_n(acc.begin(), w, 0);
      std::uint64_t pending = 0;
      for (std::size_t t = 0; t < i; ++t) {
        if (pending == bound) {
          reduce_all(acc.data(), w, p);
          extra += w;
          pending = 0;
        }
        ++pending;
        const std::uint64_t x = l(i, t);
        if (x == 0) continue;
        const Residue* src = b.row(t) + jb;
        for (std::size_t j = 0; j < w; ++j) acc[j] += x * src[j];
      }
      for (std::size_t j = 0; j < w; ++j) brow[j] = f.sub(brow[j], f.reduce(acc[j]));
    }
  }
  const std::uint64_t tri = std::uint64_t{r} * (r - 1) / 2;
  counts.field_mul += tri * n;
  counts.field_add += tri * n;
  counts.modular_reductions += reductions_unit_trsm(r, n) + extra;
}

void ClassicalKernels::trsm_right_upper(const PrimeField& f, MatrixView b, ConstMatrixView u,
                                        OpCounts& counts) const {
  const std::size_t m = b.rows(), r = u.rows();
  if (u.cols() != r || b.cols() != r) {
    throw UsageError("trsm_right_upper: B " + dims(m, b.cols()) + ", U " + dims(r, u.cols()));
  }
  if (r == 0) return;

  std::vector<Residue> dinv(r);
  for (std::size_t j = 0; j < r; ++j) {
    if (u(j, j) == 0) {
      throw IntegrityError("trsm_right_upper: zero diagonal entry at " + std::to_string(j));
    }
    dinv[j] = f.inv(u(j, j));
  }
  counts.field_inv += r;
  if (m == 0) return;

  const std::uint32_t p = f.modulus();
  const std::uint64_t bound = f.accumulation_bound();
  std::vector<std::uint64_t> acc(r);
  std::uint64_t extra = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Residue* brow = b.row(i);
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t j = 0; j < r; ++j) {
      const Residue x = f.mul(f.sub(brow[j], f.reduce(acc[j])), dinv[j]);
      brow[j] = x;
      if (x != 0) {
        const Residue* urow = u.row(j);
        for (std::size_t t = j + 1; t < r; ++t) acc[t] += std::uint64_t{x} * urow[t];
      }
      if ((j + 1) % bound == 0 && j + 1 < r) {
        reduce_all(acc.data() + j + 1, r - j - 1, p);
        extra += r - j - 1;
      }
    }
  }
  const std::uint64_t tri = std::uint64_t{r} * (r - 1) / 2;
  counts.field_mul += std::uint64_t{m} * (tri + r);
  counts.field_add += std::uint64_t{m} * tri;
  counts.modular_reductions += reductions_trsm(m, r) + extra;
}

const Kernels& classical_kernels() {
  static const ClassicalKernels k;
  return k;
}

}  // namespace rpluq
