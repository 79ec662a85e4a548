#include "rpluq/matgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rpluq/errors.hpp"
#include "rpluq/kernels.hpp"
#include "rpluq/prime_field.hpp"

namespace rpluq::matgen {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("Rng::below: empty range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound that fits, so every residue is equally likely.
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

std::vector<std::size_t> Rng::sample(std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
  pool.resize(k);
  return pool;
}

namespace {

PrimeField checked_field(std::uint32_t p) { return PrimeField(p, PrimeField::kHardMaxModulus); }

// -X, so that mm_acc on a zero target yields the product.
void negate(const PrimeField& f, DenseMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = f.neg(x(i, j));
  }
}

DenseMatrix product(const PrimeField& f, DenseMatrix a, const DenseMatrix& b) {
  negate(f, a);
  DenseMatrix c(a.rows(), b.cols(), f.modulus());
  OpCounts ignored;
  mm_acc(f, c.view(), a.view(), b.view(), ignored);
  return c;
}

}  // namespace

DenseMatrix gen_uniform(std::size_t m, std::size_t n, std::uint32_t p, std::uint64_t seed) {
  checked_field(p);
  Rng rng(seed);
  DenseMatrix a(m, n, p);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<Residue>(rng.below(p));
  }
  return a;
}

DenseMatrix gen_generic(std::size_t m, std::size_t n, std::uint32_t p, std::uint64_t seed) {
  const PrimeField f = checked_field(p);
  Rng rng(seed);
  const std::size_t d = std::min(m, n);
  DenseMatrix l(m, d, p), u(d, n, p);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < std::min(i, d); ++j) l(i, j) = static_cast<Residue>(rng.below(p));
    if (i < d) l(i, i) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) {
    u(i, i) = rng.nonzero(p);
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = static_cast<Residue>(rng.below(p));
  }
  return product(f, std::move(l), u);
}

DenseMatrix gen_full_rank_generic(std::size_t n, std::uint32_t p, std::uint64_t seed) {
  if (n == 0) throw UsageError("gen_full_rank_generic: n must be at least 1");
  return gen_generic(n, n, p, seed);
}

DenseMatrix gen_rank_deficient_leu(std::size_t m, std::size_t n, std::size_t r, std::uint32_t p,
                                   std::uint64_t seed) {
  if (r > std::min(m, n)) {
    throw UsageError("gen_rank_deficient_leu: r = " + std::to_string(r) +
                     " exceeds min(m, n) = " + std::to_string(std::min(m, n)));
  }
  const PrimeField f = checked_field(p);
  Rng rng(seed);
  const auto rows = rng.sample(m, r);
  const auto cols = rng.sample(n, r);
  DenseMatrix l(m, m, p), u(n, n, p);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = static_cast<Residue>(rng.below(p));
    l(i, i) = rng.nonzero(p);
  }
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = rng.nonzero(p);
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = static_cast<Residue>(rng.below(p));
  }
  // L E U = sum_s L[:, rows[s]] U[cols[s], :].
  DenseMatrix ls(m, r, p), us(r, n, p);
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t i = 0; i < m; ++i) ls(i, s) = l(i, rows[s]);
    for (std::size_t j = 0; j < n; ++j) us(s, j) = u(cols[s], j);
  }
  return product(f, std::move(ls), us);
}

DenseMatrix gen_rank_deficient_leu(std::size_t n, std::size_t r, std::uint32_t p,
                                   std::uint64_t seed) {
  return gen_rank_deficient_leu(n, n, r, p, seed);
}

}  // namespace rpluq::matgen
