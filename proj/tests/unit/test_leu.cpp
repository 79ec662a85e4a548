#include <vector>

#include "doctest.h"
#include "rpluq/errors.hpp"
#include "rpluq/leu.hpp"
#include "rpluq/matgen.hpp"
#include "rpluq/oracle.hpp"
#include "rpluq/pluq.hpp"

using namespace rpluq;

namespace {

PluqFactors run(const DenseMatrix& a, std::size_t threshold = 1) {
  OpCounts c;
  return pluq(a, threshold, c);
}

DenseMatrix random_unit_lower(std::size_t s, std::uint32_t p, std::uint64_t seed) {
  auto y = matgen::gen_uniform(s, s, p, seed);
  for (std::size_t i = 0; i < s; ++i) {
    y(i, i) = 1;
    for (std::size_t j = i + 1; j < s; ++j) y(i, j) = 0;
  }
  return y;
}

DenseMatrix random_upper(std::size_t s, std::uint32_t p, std::uint64_t seed) {
  auto z = matgen::gen_uniform(s, s, p, seed);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < i; ++j) z(i, j) = 0;
  }
  return z;
}

PluqFactors adversarial_pluq(DenseMatrix a) {
  const PrimeField f = a.field();
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> row_at(m), col_at(n);
  for (std::size_t i = 0; i < m; ++i) row_at[i] = i;
  for (std::size_t j = 0; j < n; ++j) col_at[j] = j;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i) {
      if (a(i, c) != 0) p = i;
    }
    if (p == m) continue;
    swap_rows(a.view(), r, p);
    swap_cols(a.view(), r, c);
    std::swap(row_at[r], row_at[p]);
    std::swap(col_at[r], col_at[c]);
    const Residue inv = f.inv(a(r, r));
    for (std::size_t i = r + 1; i < m; ++i) {
      const Residue l = f.mul(a(i, r), inv);
      a(i, r) = l;
      for (std::size_t j = r + 1; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(l, a(r, j)));
    }
    ++r;
  }
  return {Permutation(row_at).inverse(), Permutation(col_at), r, std::move(a)};
}

std::size_t nonzeros(const DenseMatrix& e) {
  std::size_t c = 0;
  for (auto v : e.entries()) c += v != 0;
  return c;
}

}  // namespace

TEST_CASE("identity") {
  const auto a = DenseMatrix::identity(5, 7);
  const auto leu = to_leu(run(a), a);
  CHECK(leu.Lbar == a);
  CHECK(leu.E == a);
  CHECK(leu.Ubar == a);
}

TEST_CASE("zero matrix") {
  const DenseMatrix a(3, 4, 7);
  const auto leu = to_leu(run(a), a);
  CHECK(leu.Lbar == DenseMatrix::identity(3, 7));
  CHECK(leu.E.is_zero());
  CHECK(leu.Ubar == DenseMatrix(4, 4, 7));
}

TEST_CASE("random rank deficient instances") {
  std::uint64_t seed = 0;
  for (std::size_t n : {6u, 8u, 13u}) {
    for (std::size_t r : {std::size_t{1}, n / 2, n - 1}) {
      const auto a = matgen::gen_rank_deficient_leu(n, r, 7, seed++);
      for (std::size_t threshold : {1u, 30u}) {
        const auto f = run(a, threshold);
        const auto leu = to_leu(f, a);
        CHECK(is_unit_lower_triangular(leu.Lbar));
        CHECK(is_upper_triangular(leu.Ubar));
        CHECK(nonzeros(leu.E) == r);
        CHECK(multiply(multiply(leu.Lbar, leu.E), leu.Ubar) == a);
      }
    }
  }
}

TEST_CASE("E has ones in distinct rows and columns") {
  const auto a = matgen::gen_rank_deficient_leu(9, 11, 4, 5, 3);
  const auto leu = to_leu(run(a), a);
  std::vector<int> rows(9), cols(11);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 11; ++j) {
      if (leu.E(i, j)) {
        CHECK(leu.E(i, j) == 1);
        ++rows[i];
        ++cols[j];
      }
    }
  }
  for (int c : rows) CHECK(c <= 1);
  for (int c : cols) CHECK(c <= 1);
}

TEST_CASE("triangular extension with Y = I, Z = 0") {
  const auto a = matgen::gen_rank_deficient_leu(6, 3, 7, 1);
  const auto f = run(a);
  const auto ext = check_triangular_extension(f, DenseMatrix::identity(3, 7), DenseMatrix(3, 3, 7));
  CHECK(ext.lower_unit);
  CHECK(ext.upper);
}

TEST_CASE("triangular extension with random Y and Z") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t m = 6 + seed % 3, n = 6 + (seed / 3) % 3, r = 3;
    const auto a = matgen::gen_rank_deficient_leu(m, n, r, 7, seed);
    for (std::size_t threshold : {1u, 30u}) {
      const auto f = run(a, threshold);
      for (std::uint64_t s = 0; s < 50; ++s) {
        const auto ext = check_triangular_extension(f, random_unit_lower(m - r, 7, 100 * seed + s),
                                                    random_upper(n - r, 7, 7 + 100 * seed + s));
        REQUIRE(ext.lower_unit);
        REQUIRE(ext.upper);
      }
    }
  }
}

TEST_CASE("the property is specific to the pivoting strategy") {
  // A valid PLUQ of the same matrices from plain Gaussian elimination with
  // transpositions, taking the last nonzero row as pivot.
  int failures = 0, leu_throws = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = matgen::gen_rank_deficient_leu(6, 3, 7, seed);
    const auto g = adversarial_pluq(a);
    REQUIRE(verify_factors(a, g).ok);
    const auto ext = check_triangular_extension(g, random_unit_lower(3, 7, seed),
                                                random_upper(3, 7, seed + 1));
    failures += !(ext.lower_unit && ext.upper);
    try {
      (void)to_leu(g, a);
    } catch (const IntegrityError&) {
      ++leu_throws;
    }
  }
  MESSAGE("transposition pivoting: extension fails on " << failures << "/60, to_leu rejects "
                                                        << leu_throws << "/60");
  CHECK(failures > 0);
  CHECK(leu_throws > 0);
}

TEST_CASE("dimension and field checks") {
  const auto a = matgen::gen_rank_deficient_leu(5, 2, 7, 1);
  const auto f = run(a);
  CHECK_THROWS_AS(check_triangular_extension(f, DenseMatrix::identity(2, 7), DenseMatrix(3, 3, 7)),
                  UsageError);
  CHECK_THROWS_AS(check_triangular_extension(f, DenseMatrix::identity(3, 5), DenseMatrix(3, 3, 7)),
                  UsageError);
  CHECK_THROWS_AS(to_leu(f, DenseMatrix(5, 4, 7)), UsageError);
}
