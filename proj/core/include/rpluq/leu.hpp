#pragma once

#include "rpluq/factors.hpp"
#include "rpluq/matrix.hpp"

namespace rpluq {

/// A = Lbar E Ubar with Lbar m x m unit lower triangular, Ubar n x n upper
/// triangular and E a 0/1 matrix with r ones in distinct rows and columns.
struct LeuFactors {
  DenseMatrix Lbar;
  DenseMatrix E;
  DenseMatrix Ubar;
};

bool is_unit_lower_triangular(const DenseMatrix& a);
bool is_upper_triangular(const DenseMatrix& a);

/// Lbar = P [L 0; M I] P^T, E = P [I_r 0; 0 0] Q, Ubar = Q^T [U V; 0 0] Q.
///
/// Only valid for factors computed by this library's eliminations: the
/// triangularity of Lbar and Ubar depends on the pivoting strategy. Throws
/// IntegrityError if either is not triangular or the product is not `a`.
LeuFactors to_leu(const PluqFactors& f, const DenseMatrix& a);

struct TriangularExtension {
  bool lower_unit = false;  // P [L 0; M Y] P^T is unit lower triangular
  bool upper = false;       // Q^T [U V; 0 Z] Q is upper triangular
};

/// Y must be (m-r) x (m-r) unit lower, Z (n-r) x (n-r) upper triangular.
TriangularExtension check_triangular_extension(const PluqFactors& f, const DenseMatrix& Y,
                                               const DenseMatrix& Z);

}  // namespace rpluq
