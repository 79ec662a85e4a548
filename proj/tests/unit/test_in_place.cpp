#include "alloc_tracker.hpp"
#include "doctest.h"
#include "rpluq/matgen.hpp"
#include "rpluq/pluq.hpp"

using namespace rpluq;

namespace {

// Index words allowed per row and column, besides the r3 x r2 scratch:
// permutations of the current level and its four children, the S/T/compose
// temporaries and one kernel accumulator row.
constexpr std::size_t kWordsPerDim = 8;

struct Measured {
  std::size_t peak_bytes;
  std::size_t scratch_elements;
};

Measured measure(DenseMatrix a, std::size_t threshold) {
  const PrimeField f = a.field();
  PluqTrace trace;
  trace.splits.reserve(1 << 20);  // keep instrumentation out of the window
  OpCounts c;
  PluqOptions o;
  o.threshold = threshold;
  o.trace = &trace;
  testing::AllocWindow w;
  (void)pluq_in_place(f, a.view(), c, o);
  return {w.peak_bytes(), trace.max_scratch_elements};
}

std::size_t bound(std::size_t m, std::size_t n, std::size_t scratch) {
  return scratch * sizeof(Residue) + kWordsPerDim * (m + n) * sizeof(std::size_t);
}

}  // namespace

TEST_CASE("tracker sees allocations") {
  testing::AllocWindow w;
  auto* p = new std::vector<int>(1000);
  CHECK(w.peak_bytes() >= 4000);
  delete p;
}

TEST_CASE("peak auxiliary memory on 256x256 inputs") {
  const std::size_t n = 256;
  for (std::size_t r : {0u, 8u, 64u, 128u, 200u, 256u}) {
    for (std::uint32_t p : {2u, 1009u}) {
      for (std::size_t threshold : {1u, 30u}) {
        const auto res = measure(matgen::gen_rank_deficient_leu(n, r, p, r + p), threshold);
        CAPTURE(r);
        CAPTURE(p);
        CAPTURE(threshold);
        CAPTURE(res.scratch_elements);
        CHECK(res.peak_bytes <= bound(n, n, res.scratch_elements));
      }
    }
  }
  const auto gen = measure(matgen::gen_full_rank_generic(n, 1009, 1), 1);
  CHECK(gen.scratch_elements == 0);
  CHECK(gen.peak_bytes <= bound(n, n, 0));
}

TEST_CASE("rank deficient inputs do need the scratch block") {
  const auto res = measure(matgen::gen_rank_deficient_leu(256, 128, 1009, 3), 1);
  CHECK(res.scratch_elements > 0);
}

TEST_CASE("the owning entry point does not copy the matrix") {
  auto a = matgen::gen_rank_deficient_leu(128, 70, 1009, 2);
  OpCounts c;
  testing::AllocWindow w;
  const auto f = pluq(std::move(a), 30, c);
  CHECK(f.rank == 70);
  CHECK(w.peak_bytes() < 128 * 128 * sizeof(Residue) / 4);
}
