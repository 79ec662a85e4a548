#pragma once

#include <iosfwd>
#include <string>

#include "rpluq/factors.hpp"
#include "rpluq/matrix.hpp"

namespace rpluq {

// Matrix text format:
//   m n p
//   a_00 a_01 ... a_0(n-1)
//   ...
// Residues are decimal in [0, p); readers reject anything else.
//
// Factor file format:
//   m n p r
//   P(0) ... P(m-1)
//   Q(0) ... Q(n-1)
//   <packed matrix in the matrix text format>

void write_matrix(std::ostream& os, const DenseMatrix& a);
DenseMatrix read_matrix(std::istream& is);

void write_factors(std::ostream& os, const PluqFactors& f);
PluqFactors read_factors(std::istream& is);

std::string to_text(const DenseMatrix& a);
DenseMatrix matrix_from_text(const std::string& text);

}  // namespace rpluq
