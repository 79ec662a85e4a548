#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rpluq/factors.hpp"
#include "rpluq/kernels.hpp"
#include "rpluq/matrix.hpp"
#include "rpluq/op_counts.hpp"
#include "rpluq/permutation.hpp"
#include "rpluq/prime_field.hpp"

namespace rpluq {

/// Ranks found by one quadrant split of the recursion.
struct SplitRecord {
  std::size_t depth = 0;
  std::size_t rows = 0, cols = 0;
  std::size_t r1 = 0, r2 = 0, r3 = 0, r4 = 0;
};

/// Optional instrumentation filled in by the recursive decomposition.
struct PluqTrace {
  std::vector<SplitRecord> splits;
  std::size_t base_case_calls = 0;
  /// Largest r3 * r2 scratch block needed for the copy of I.
  std::size_t max_scratch_elements = 0;
};

struct PluqOptions {
  /// Switch to the iterative base case when min(m, n) <= threshold.
  std::size_t threshold = 30;
  /// Update kernels; nullptr selects classical_kernels().
  const Kernels* kernels = nullptr;
  PluqTrace* trace = nullptr;
};

/// P, Q and rank of an in-place decomposition; the factors live in the view.
struct InPlaceResult {
  Permutation P;
  Permutation Q;
  std::size_t rank = 0;
};

/// Rank-profile revealing PLUQ by quadrant recursion.
///
/// Consumes `a`: its storage becomes `packed` in the result. Besides the
/// permutations, the only auxiliary storage is an r3 x r2 scratch block per
/// split and O(m + n) index and accumulator buffers.
PluqFactors pluq(DenseMatrix a, OpCounts& counts, const PluqOptions& options = {});
PluqFactors pluq(DenseMatrix a, std::size_t threshold, OpCounts& counts);

/// Frontier (i, j) of the iterative base case after every step.
using FrontierLog = std::vector<std::pair<std::size_t, std::size_t>>;

/// The iterative base case: Z-curve pivot search over a growing leading
/// submatrix, right-looking updates.
PluqFactors pluq_base_case(DenseMatrix a, OpCounts& counts, FrontierLog* frontier = nullptr);

/// Single row and single column decompositions. The pivot is the first
/// nonzero entry; it is moved to the front by a cyclic shift, so the
/// skipped (zero) indices keep their relative order.
PluqFactors base_case_row(DenseMatrix a, OpCounts& counts);
PluqFactors base_case_col(DenseMatrix a, OpCounts& counts);

/// Row block permutation S: S^T A lists the row blocks of sizes
/// (r1+r2, k-r1-r2, r3+r4, m-k-r3-r4) in the order 1, 3, 2, 4.
Permutation build_S(std::size_t r1, std::size_t r2, std::size_t r3, std::size_t r4,
                    std::size_t k, std::size_t m);
/// Column block permutation T: A T^T lists the column blocks of sizes
/// (r1, r3, k-r1-r3, r2, r4, n-k-r2-r4) in the order 1, 4, 2, 5, 3, 6.
Permutation build_T(std::size_t r1, std::size_t r2, std::size_t r3, std::size_t r4,
                    std::size_t k, std::size_t n);

InPlaceResult pluq_in_place(const PrimeField& f, MatrixView a, OpCounts& counts,
                            const PluqOptions& options = {});
InPlaceResult pluq_base_in_place(const PrimeField& f, MatrixView a, OpCounts& counts,
                                 FrontierLog* frontier = nullptr);
InPlaceResult base_row_in_place(const PrimeField& f, MatrixView a, OpCounts& counts);
InPlaceResult base_col_in_place(const PrimeField& f, MatrixView a, OpCounts& counts);

}  // namespace rpluq
