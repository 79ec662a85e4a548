#include "rpluq/rank_profile.hpp"

#include <algorithm>

#include "rpluq/errors.hpp"

namespace rpluq {

RankProfile::RankProfile(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
    throw UsageError("rank profile with repeated index");
  }
}

PivotSupport::PivotSupport(const PluqFactors& f) : m_(f.rows()), n_(f.cols()) {
  if (f.P.size() != m_ || f.Q.size() != n_ || f.rank > std::min(m_, n_)) {
    throw UsageError("inconsistent factors");
  }
  std::vector<std::size_t> orig_row(f.rank);
  for (std::size_t i = 0; i < m_; ++i) {
    if (f.P(i) < f.rank) orig_row[f.P(i)] = i;
  }
  pairs_.reserve(f.rank);
  for (std::size_t s = 0; s < f.rank; ++s) pairs_.emplace_back(orig_row[s], f.Q(s));
}

ProfilePair PivotSupport::leading(std::size_t k, std::size_t t) const {
  if (k > m_ || t > n_) {
    throw UsageError("leading (" + std::to_string(k) + "," + std::to_string(t) +
                     ") outside " + std::to_string(m_) + "x" + std::to_string(n_));
  }
  std::vector<std::size_t> rows, cols;
  for (auto [a, b] : pairs_) {
    if (a < k && b < t) {
      rows.push_back(a);
      cols.push_back(b);
    }
  }
  return {RankProfile(std::move(rows)), RankProfile(std::move(cols))};
}

RankProfile row_rank_profile(const PluqFactors& f) {
  return PivotSupport(f).leading(f.rows(), f.cols()).rows;
}

RankProfile col_rank_profile(const PluqFactors& f) {
  return PivotSupport(f).leading(f.rows(), f.cols()).cols;
}

ProfilePair leading_rank_profiles(const PluqFactors& f, std::size_t k, std::size_t t) {
  return PivotSupport(f).leading(k, t);
}

}  // namespace rpluq
