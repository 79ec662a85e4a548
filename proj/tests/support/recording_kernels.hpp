#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpluq/kernels.hpp"

namespace rpluq::testing {

/// Forwards to the classical kernels and checks every call's charge against
/// the closed forms of the cost model.
class RecordingKernels final : public Kernels {
 public:
  struct Call {
    std::string kind;
    std::size_t m, k, n;
    OpCounts charged;
    OpCounts expected;
  };

  void mm_acc(const PrimeField& f, MatrixView c, ConstMatrixView a, ConstMatrixView b,
              OpCounts& counts) const override {
    const OpCounts before = counts;
    classical_kernels().mm_acc(f, c, a, b, counts);
    const std::uint64_t m = c.rows(), k = a.cols(), n = c.cols();
    const std::uint64_t empty = (m == 0 || n == 0 || k == 0);
    calls_.push_back({"mm", c.rows(), a.cols(), c.cols(), counts - before,
                      empty ? OpCounts{} : OpCounts{m * n * k, m * n * k, 0, reductions_mm(m, k, n)}});
  }

  void trsm_left_unit_lower(const PrimeField& f, ConstMatrixView l, MatrixView b,
                            OpCounts& counts) const override {
    const OpCounts before = counts;
    classical_kernels().trsm_left_unit_lower(f, l, b, counts);
    const std::uint64_t r = l.rows(), n = b.cols();
    const std::uint64_t tri = r * (r - (r ? 1 : 0)) / 2;
    const bool empty = r == 0 || n == 0;
    calls_.push_back({"trsm_left", r, r, n, counts - before,
                      empty ? OpCounts{} : OpCounts{tri * n, tri * n, 0, reductions_unit_trsm(r, n)}});
  }

  void trsm_right_upper(const PrimeField& f, MatrixView b, ConstMatrixView u,
                        OpCounts& counts) const override {
    const OpCounts before = counts;
    classical_kernels().trsm_right_upper(f, b, u, counts);
    const std::uint64_t m = b.rows(), r = u.rows();
    const std::uint64_t tri = r * (r - (r ? 1 : 0)) / 2;
    calls_.push_back({"trsm_right", m, r, r, counts - before,
                      r == 0 ? OpCounts{}
                             : OpCounts{m * (tri + r), m * tri, r, reductions_trsm(m, r)}});
  }

  [[nodiscard]] const std::vector<Call>& calls() const { return calls_; }

  /// Index of the first call whose charge differs from the model, or -1.
  [[nodiscard]] long first_mismatch() const {
    for (std::size_t i = 0; i < calls_.size(); ++i) {
      if (!(calls_[i].charged == calls_[i].expected)) return static_cast<long>(i);
    }
    return -1;
  }

  [[nodiscard]] OpCounts total() const {
    OpCounts t;
    for (const auto& c : calls_) t += c.charged;
    return t;
  }

 private:
  mutable std::vector<Call> calls_;
};

}  // namespace rpluq::testing
