#pragma once

#include <cstdint>

namespace rpluq {

/// Tallies of field operations and modeled modular reductions.
///
/// Reductions follow the delayed-reduction model: a sum of products
/// `sum a_i * b_i` is reduced once, so an m x k by k x n product charges m*n
/// reductions no matter how large k is. Counters only ever grow.
struct OpCounts {
  std::uint64_t field_mul = 0;
  std::uint64_t field_add = 0;
  std::uint64_t field_inv = 0;
  std::uint64_t modular_reductions = 0;

  [[nodiscard]] std::uint64_t field_ops() const { return field_mul + field_add + field_inv; }

  OpCounts& operator+=(const OpCounts& o) {
    field_mul += o.field_mul;
    field_add += o.field_add;
    field_inv += o.field_inv;
    modular_reductions += o.modular_reductions;
    return *this;
  }

  friend OpCounts operator-(OpCounts a, const OpCounts& b) {
    a.field_mul -= b.field_mul;
    a.field_add -= b.field_add;
    a.field_inv -= b.field_inv;
    a.modular_reductions -= b.modular_reductions;
    return a;
  }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

}  // namespace rpluq
