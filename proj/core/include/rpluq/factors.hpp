#pragma once

#include <cstddef>
#include <string>

#include "rpluq/matrix.hpp"
#include "rpluq/permutation.hpp"

namespace rpluq {

/// Output of a rank-revealing elimination: A = Mat(P) [L; M] [U V] Mat(Q).
///
/// `packed` holds [L\U, V; M, 0]: the strictly lower part of the first r
/// columns is [L; M] (unit diagonal implicit), the first r rows from the
/// diagonal on are [U V], and the trailing (m-r) x (n-r) block is zero.
///
/// With the Permutation convention, original row i sits at packed row P(i),
/// and packed column c holds original column Q(c).
struct PluqFactors {
  Permutation P;
  Permutation Q;
  std::size_t rank = 0;
  DenseMatrix packed;

  [[nodiscard]] std::size_t rows() const { return packed.rows(); }
  [[nodiscard]] std::size_t cols() const { return packed.cols(); }
  [[nodiscard]] std::uint32_t modulus() const { return packed.modulus(); }

  friend bool operator==(const PluqFactors&, const PluqFactors&) = default;
};

/// m x r unit lower trapezoidal [L; M] with explicit ones.
DenseMatrix extract_L(const DenseMatrix& packed, std::size_t r);
/// r x n upper trapezoidal [U V].
DenseMatrix extract_U(const DenseMatrix& packed, std::size_t r);

/// Mat(P) [L; M] [U V] Mat(Q), computed with plain dense products.
DenseMatrix reconstruct(const PluqFactors& f);

struct VerifyReport {
  bool ok = true;
  std::string failure;  // first failed invariant, empty when ok
};

/// Checks the structural invariants (shapes, rank bound, nonzero U diagonal,
/// zero trailing block) and exact reconstruction of `a`.
VerifyReport verify_factors(const DenseMatrix& a, const PluqFactors& f);

}  // namespace rpluq
