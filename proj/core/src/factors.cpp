#include "rpluq/factors.hpp"

#include <algorithm>

#include "rpluq/errors.hpp"

namespace rpluq {

DenseMatrix extract_L(const DenseMatrix& packed, std::size_t r) {
  if (r > std::min(packed.rows(), packed.cols())) throw UsageError("extract_L: rank too large");
  DenseMatrix l(packed.rows(), r, packed.modulus());
  for (std::size_t i = 0; i < packed.rows(); ++i) {
    for (std::size_t j = 0; j < r && j <= i; ++j) l(i, j) = (i == j) ? 1 : packed(i, j);
  }
  return l;
}

DenseMatrix extract_U(const DenseMatrix& packed, std::size_t r) {
  if (r > std::min(packed.rows(), packed.cols())) throw UsageError("extract_U: rank too large");
  DenseMatrix u(r, packed.cols(), packed.modulus());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < packed.cols(); ++j) u(i, j) = packed(i, j);
  }
  return u;
}

DenseMatrix reconstruct(const PluqFactors& f) {
  const DenseMatrix lu = multiply(extract_L(f.packed, f.rank), extract_U(f.packed, f.rank));
  DenseMatrix a(f.rows(), f.cols(), f.modulus());
  // A[i, Q(c)] = LU[P(i), c]
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t c = 0; c < f.cols(); ++c) a(i, f.Q(c)) = lu(f.P(i), c);
  }
  return a;
}

VerifyReport verify_factors(const DenseMatrix& a, const PluqFactors& f) {
  auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };
  if (a.rows() != f.rows() || a.cols() != f.cols()) return fail("dimension mismatch");
  if (a.modulus() != f.modulus()) return fail("modulus mismatch");
  if (f.P.size() != f.rows()) return fail("P has wrong size");
  if (f.Q.size() != f.cols()) return fail("Q has wrong size");
  if (f.rank > std::min(f.rows(), f.cols())) return fail("rank exceeds min(m, n)");
  for (std::size_t i = 0; i < f.rank; ++i) {
    if (f.packed(i, i) == 0) {
      return fail("U is singular: zero diagonal entry at " + std::to_string(i));
    }
  }
  for (std::size_t i = f.rank; i < f.rows(); ++i) {
    for (std::size_t j = f.rank; j < f.cols(); ++j) {
      if (f.packed(i, j) != 0) {
        return fail("trailing block not zero at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      }
    }
  }
  const DenseMatrix back = reconstruct(f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (back(i, j) != a(i, j)) {
        return fail("reconstruction differs at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      }
    }
  }
  return {};
}

}  // namespace rpluq
