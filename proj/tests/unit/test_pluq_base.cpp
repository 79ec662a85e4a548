#include <vector>

#include "doctest.h"
#include "rpluq/matgen.hpp"
#include "rpluq/oracle.hpp"
#include "rpluq/pluq.hpp"
#include "rpluq/rank_profile.hpp"
#include "test_support.hpp"

using namespace rpluq;

namespace {

PluqFactors base(const DenseMatrix& a) {
  OpCounts c;
  return pluq_base_case(a, c);
}

}  // namespace

TEST_CASE("zero input") {
  const auto f = base(DenseMatrix(3, 4, 7));
  CHECK(f.rank == 0);
  CHECK(f.P.is_identity());
  CHECK(f.Q.is_identity());
}

TEST_CASE("anti-diagonal 2x2 over F_2") {
  const DenseMatrix a(2, 2, 2, std::vector<std::uint64_t>{0, 1, 1, 0});
  const auto f = base(a);
  CHECK(f.rank == 2);
  CHECK(verify_factors(a, f).ok);
  CHECK(row_rank_profile(f) == RankProfile{0, 1});
  CHECK(col_rank_profile(f) == RankProfile{0, 1});
}

TEST_CASE("3x3 example agrees with the recursive algorithm") {
  const DenseMatrix a(3, 3, 2, std::vector<std::uint64_t>{0, 0, 0, 0, 0, 1, 0, 1, 0});
  const auto f = base(a);
  CHECK(f.rank == 2);
  CHECK(verify_factors(a, f).ok);
  CHECK(row_rank_profile(f) == RankProfile{1, 2});
  CHECK(col_rank_profile(f) == RankProfile{1, 2});
  OpCounts c;
  const auto g = pluq(a, 1, c);
  CHECK(g.rank == f.rank);
  CHECK(testing::leading_mismatch(g, oracle::all_leading_rank_profiles_naive(a)) == "");
  CHECK(testing::leading_mismatch(f, oracle::all_leading_rank_profiles_naive(a)) == "");
}

TEST_CASE("all 512 3x3 matrices over F_2, every leading submatrix") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    const auto a = testing::enumerate_matrix(3, 3, 2, code);
    const auto f = base(a);
    CAPTURE(code);
    REQUIRE(verify_factors(a, f).ok);
    REQUIRE(testing::leading_mismatch(f, oracle::all_leading_rank_profiles_naive(a)) == "");
  }
}

TEST_CASE("first nonzero searches keep original order after earlier pivots") {
  // A transposition of columns 0 and 2 at the first pivot would put column 1
  // ahead of column 0 and select it for the second pivot.
  const DenseMatrix a(3, 3, 2, std::vector<std::uint64_t>{0, 0, 1, 0, 0, 0, 1, 1, 0});
  const auto f = base(a);
  CHECK(col_rank_profile(f) == RankProfile{0, 2});
  CHECK(row_rank_profile(f) == RankProfile{0, 2});
}

TEST_CASE("frontier grows monotonically and stays in range") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t m = 3 + seed % 7, n = 2 + (seed * 5) % 11;
    const auto a = matgen::gen_rank_deficient_leu(m, n, std::min(m, n) / 2, 3, seed);
    FrontierLog log;
    OpCounts c;
    const auto f = pluq_base_case(a, c, &log);
    REQUIRE(verify_factors(a, f).ok);
    REQUIRE_FALSE(log.empty());
    for (std::size_t s = 0; s < log.size(); ++s) {
      CHECK(log[s].first <= m);
      CHECK(log[s].second <= n);
      if (s > 0) {
        CHECK(log[s].first >= log[s - 1].first);
        CHECK(log[s].second >= log[s - 1].second);
      }
    }
    CHECK(log.back() == std::pair{m, n});
  }
}

TEST_CASE("random instances: reconstruction and leading profiles") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t m = 1 + seed % 13, n = 1 + (seed * 7) % 17;
    const std::size_t r = (seed % 3 == 0) ? std::min(m, n) : std::min(m, n) / 2;
    const auto a = matgen::gen_rank_deficient_leu(m, n, r, seed % 2 ? 3 : 1009, seed);
    const auto f = base(a);
    CHECK(f.rank == r);
    CHECK(verify_factors(a, f).ok);
    CHECK(testing::leading_mismatch(f, oracle::all_leading_rank_profiles_naive(a)) == "");
  }
}

TEST_CASE("one inverse per pivot") {
  const auto a = matgen::gen_rank_deficient_leu(12, 9, 5, 101, 3);
  OpCounts c;
  const auto f = pluq_base_case(a, c);
  CHECK(c.field_inv == f.rank);
}
