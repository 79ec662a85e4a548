#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rpluq/factors.hpp"

namespace rpluq {

/// Strictly increasing list of row (or column) indices.
class RankProfile {
 public:
  RankProfile() = default;
  RankProfile(std::initializer_list<std::size_t> idx) : RankProfile(std::vector(idx)) {}
  /// Sorts; throws UsageError on duplicates.
  explicit RankProfile(std::vector<std::size_t> indices);

  [[nodiscard]] std::size_t size() const { return idx_.size(); }
  [[nodiscard]] bool empty() const { return idx_.empty(); }
  [[nodiscard]] const std::vector<std::size_t>& indices() const { return idx_; }
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return idx_[i]; }

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  std::vector<std::size_t> idx_;
};

struct ProfilePair {
  RankProfile rows;
  RankProfile cols;

  friend bool operator==(const ProfilePair&, const ProfilePair&) = default;
};

/// Pivot i of the decomposition sits at original position
/// (row = P^-1(i), col = Q(i)). Built once in O(m + r); every leading
/// submatrix query then costs O(r).
class PivotSupport {
 public:
  explicit PivotSupport(const PluqFactors& f);

  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }
  [[nodiscard]] std::size_t rows() const { return m_; }
  [[nodiscard]] std::size_t cols() const { return n_; }

  /// Row and column rank profiles of the leading k x t submatrix.
  [[nodiscard]] ProfilePair leading(std::size_t k, std::size_t t) const;

 private:
  std::size_t m_, n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

RankProfile row_rank_profile(const PluqFactors& f);
RankProfile col_rank_profile(const PluqFactors& f);
ProfilePair leading_rank_profiles(const PluqFactors& f, std::size_t k, std::size_t t);

}  // namespace rpluq
