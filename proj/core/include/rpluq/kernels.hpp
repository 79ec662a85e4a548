#pragma once

#include <cstdint>

#include "rpluq/matrix.hpp"
#include "rpluq/op_counts.hpp"
#include "rpluq/prime_field.hpp"

namespace rpluq {

/// Reductions charged by the delayed-reduction cost model.
/// Empty products write nothing and charge nothing.
constexpr std::uint64_t reductions_mm(std::uint64_t m, std::uint64_t k, std::uint64_t n) {
  return k == 0 ? 0 : m * n;
}
constexpr std::uint64_t reductions_unit_trsm(std::uint64_t m, std::uint64_t n) { return m * n; }
constexpr std::uint64_t reductions_trsm(std::uint64_t m, std::uint64_t n) { return 2 * m * n; }

/// The update subroutines used by the eliminations. Implementations charge
/// `counts` with the model above (plus extra reductions when an accumulation
/// exceeds the field's overflow-safe length).
///
/// All blocks may live in the same storage but must not overlap.
class Kernels {
 public:
  virtual ~Kernels() = default;

  /// C <- C - A B, with C m x n, A m x k, B k x n.
  virtual void mm_acc(const PrimeField& f, MatrixView c, ConstMatrixView a, ConstMatrixView b,
                      OpCounts& counts) const = 0;

  /// B <- L^-1 B. Only the strictly lower part of the r x r block `l` is read;
  /// its diagonal is taken to be one.
  virtual void trsm_left_unit_lower(const PrimeField& f, ConstMatrixView l, MatrixView b,
                                    OpCounts& counts) const = 0;

  /// B <- B U^-1. Only the upper part (with diagonal) of the r x r block `u`
  /// is read. Throws IntegrityError on a zero diagonal entry.
  virtual void trsm_right_upper(const PrimeField& f, MatrixView b, ConstMatrixView u,
                                OpCounts& counts) const = 0;
};

/// Cubic kernels with delayed reduction in 64-bit accumulators.
class ClassicalKernels final : public Kernels {
 public:
  void mm_acc(const PrimeField& f, MatrixView c, ConstMatrixView a, ConstMatrixView b,
              OpCounts& counts) const override;
  void trsm_left_unit_lower(const PrimeField& f, ConstMatrixView l, MatrixView b,
                            OpCounts& counts) const override;
  void trsm_right_upper(const PrimeField& f, MatrixView b, ConstMatrixView u,
                        OpCounts& counts) const override;
};

const Kernels& classical_kernels();

inline void mm_acc(const PrimeField& f, MatrixView c, ConstMatrixView a, ConstMatrixView b,
                   OpCounts& counts) {
  classical_kernels().mm_acc(f, c, a, b, counts);
}
inline void trsm_left_unit_lower(const PrimeField& f, ConstMatrixView l, MatrixView b,
                                 OpCounts& counts) {
  classical_kernels().trsm_left_unit_lower(f, l, b, counts);
}
inline void trsm_right_upper(const PrimeField& f, MatrixView b, ConstMatrixView u,
                             OpCounts& counts) {
  classical_kernels().trsm_right_upper(f, b, u, counts);
}

}  // namespace rpluq
