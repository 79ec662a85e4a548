#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rpluq/factors.hpp"
#include "rpluq/kernels.hpp"
#include "rpluq/matrix.hpp"
#include "rpluq/op_counts.hpp"
#include "rpluq/rank_profile.hpp"

// Brute-force references. Everything here except ple_row_major shares no code
// with the eliminations it checks: arithmetic is plain 64-bit modular
// arithmetic with Fermat inverses.
namespace rpluq::oracle {

std::size_t rank_naive(const DenseMatrix& a);

/// Greedy scan: keep row i iff it is independent of the rows kept so far.
/// This is the lexicographically smallest independent set (matroid greedy).
RankProfile row_rank_profile_naive(const DenseMatrix& a);
RankProfile col_rank_profile_naive(const DenseMatrix& a);

/// Profiles of every leading k x t submatrix, 0 <= k <= m, 0 <= t <= n.
class LeadingProfileTable {
 public:
  LeadingProfileTable(std::size_t m, std::size_t n) : m_(m), n_(n), cells_((m + 1) * (n + 1)) {}
  [[nodiscard]] const ProfilePair& at(std::size_t k, std::size_t t) const {
    return cells_[k * (n_ + 1) + t];
  }
  ProfilePair& at(std::size_t k, std::size_t t) { return cells_[k * (n_ + 1) + t]; }
  [[nodiscard]] std::size_t rows() const { return m_; }
  [[nodiscard]] std::size_t cols() const { return n_; }

 private:
  std::size_t m_, n_;
  std::vector<ProfilePair> cells_;
};

LeadingProfileTable all_leading_rank_profiles_naive(const DenseMatrix& a);

/// Determinants of the leading principal k x k submatrices, k = 1..min(m,n).
std::vector<std::uint32_t> leading_principal_minors(const DenseMatrix& a);

/// Row-splitting recursive PLE: recurse on the top half, TRSM, MM, recurse on
/// the Schur complement of the bottom half. Pivots are chosen row by row, and
/// non-pivot columns keep their relative order, so Q(0..r-1) is the column
/// rank profile. Same packed layout and reduction model as pluq().
PluqFactors ple_row_major(DenseMatrix a, OpCounts& counts, const Kernels* kernels = nullptr);

/// 2m^2 - 2m, the reductions of the recursive PLUQ on a generic-rank-profile
/// m x m input. Throws UsageError unless m is a power of two.
std::uint64_t r_pluq_closed_form(std::uint64_t m);

/// Reductions of ple_row_major on an m x n (m <= n) input with generic rank
/// profile: R(1, n) = 0 and, splitting m rows into t = floor(m/2) and m - t,
///   R(m, n) = R(t, n) + R(m - t, n - t) + (m - t)(n + t),
/// which for m = 2t is R(t, n) + R(t, n - t) + t(n + t).
std::uint64_t r_ple_recurrence(std::uint64_t m, std::uint64_t n);

}  // namespace rpluq::oracle
