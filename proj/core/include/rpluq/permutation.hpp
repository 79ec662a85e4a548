#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rpluq/matrix.hpp"

namespace rpluq {

/// A bijection sigma on {0, ..., s-1}.
///
/// Matrix convention, used everywhere in this library: Mat(sigma) has a one
/// at (i, sigma(i)). Hence
///   (Mat(sigma) * A)[i, :] = A[sigma(i), :]
///   (A * Mat(sigma))[:, sigma(i)] = A[:, i]
/// and Mat(compose(a, b)) = Mat(a) * Mat(b). Transposes are inverses.
class Permutation {
 public:
  Permutation() = default;
  /// Throws UsageError unless `map` is a bijection.
  explicit Permutation(std::vector<std::size_t> map);
  Permutation(std::initializer_list<std::size_t> map)
      : Permutation(std::vector<std::size_t>(map)) {}

  static Permutation identity(std::size_t s);
  /// T_{k,l}: swaps k and l.
  static Permutation transposition(std::size_t s, std::size_t k, std::size_t l);

  [[nodiscard]] std::size_t size() const { return map_.size(); }
  [[nodiscard]] std::size_t operator()(std::size_t i) const { return map_[i]; }
  [[nodiscard]] std::span<const std::size_t> map() const { return map_; }
  [[nodiscard]] bool is_identity() const;

  [[nodiscard]] Permutation inverse() const;

  /// Explicit s x s 0/1 matrix, for tests and dense conversions.
  [[nodiscard]] DenseMatrix to_matrix(std::uint32_t modulus) const;

  /// Space-separated images, e.g. "2 0 1".
  [[nodiscard]] std::string to_string() const;
  static Permutation parse(const std::string& text, std::size_t expected_size);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// Mat(result) = Mat(a) * Mat(b).
Permutation compose(const Permutation& a, const Permutation& b);
/// Diag(Mat(p_0), Mat(p_1), ...).
Permutation block_diag(std::span<const Permutation> parts);
Permutation block_diag(const Permutation& a, const Permutation& b);
/// Diag(I_offset, Mat(a), I_rest) of size `total`.
Permutation embed(const Permutation& a, std::size_t offset, std::size_t total);

/// A <- Mat(sigma) * A, in place on the view (cycle following, O(s) bits of
/// bookkeeping).
void apply_rows(MatrixView a, const Permutation& sigma);
/// A <- A * Mat(sigma), in place on the view.
void apply_cols(MatrixView a, const Permutation& sigma);
/// A <- Mat(sigma)^T * A and A <- A * Mat(sigma)^T, without building inverses.
void apply_rows_inverse(MatrixView a, const Permutation& sigma);
void apply_cols_inverse(MatrixView a, const Permutation& sigma);

void swap_rows(MatrixView a, std::size_t i, std::size_t j);
void swap_cols(MatrixView a, std::size_t i, std::size_t j);

}  // namespace rpluq
