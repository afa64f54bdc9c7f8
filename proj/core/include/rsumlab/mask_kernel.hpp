#pragma once

// Word-sized sumset kernel for sweeps over groups of order <= 64.
//
// c lies in A +_S B iff c = a + b with c - 2b not in S, so
//
//   A +_S B = OR over b in B of  row[b] = (b + A) \ (2b + S),
//
// and the twisted operator uses (1 + γ) b in place of 2b. Fixing (A, S) and
// precomputing the rows turns every B into an OR of |B| words, which the
// subset sweep shares across all B through a split lookup table.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rsumlab/enumerate.hpp"
#include "rsumlab/mask_group.hpp"

namespace rsumlab {

struct SumsetRows {
  std::array<Mask, 64> row{};
  unsigned n = 0;

  Mask evaluate(Mask b) const {
    Mask out = 0;
    while (b) {
      out |= row[static_cast<unsigned>(std::countr_zero(b))];
      b &= b - 1;
    }
    return out;
  }
};

/// Rows of A +_S B with the exclusion tested on a - (lambda - 1) b; lambda = 2
/// is the untwisted operator, lambda = 1 + γ the twisted one. s = 0 yields
/// the plain sumset.
SumsetRows build_rows(const MaskGroup& mg, Mask a, Mask s, std::int64_t lambda = 2);

Mask mask_sumset(const MaskGroup& mg, Mask a, Mask b);
Mask mask_restricted_sumset(const MaskGroup& mg, Mask a, Mask b);
Mask mask_generalized_sumset(const MaskGroup& mg, Mask a, Mask b, Mask s);
Mask mask_twisted_sumset(const MaskGroup& mg, Mask a, Mask b, Mask s, std::int64_t gamma);

/// Evaluates |A +_S B| for every B in a size range with (A, S) fixed.
/// Holds scratch buffers; use one instance per thread.
class SubsetSweep {
 public:
  SubsetSweep(unsigned n, SizeRange b_sizes);

  unsigned order() const { return n_; }
  std::size_t min_b() const { return b_lo_; }
  std::size_t max_b() const { return b_hi_; }
  /// Number of B of each size that the sweep visits.
  std::uint64_t count_of_size(std::size_t k) const;

  /// out[k] = min |A +_S B| over |B| = k (255 for sizes outside the range).
  void min_by_size(const SumsetRows& rows, std::span<std::uint8_t, 65> out);
  /// Calls fn(b, |A +_S B|) for every B in the range.
  void for_each(const SumsetRows& rows, const std::function<void(Mask, unsigned)>& fn);

  bool dense() const { return dense_; }

 private:
  void build_tables(const SumsetRows& rows);

  unsigned n_;
  std::size_t b_lo_;
  std::size_t b_hi_;
  bool dense_;
  unsigned lo_bits_ = 0;
  std::vector<std::uint32_t> lo_order_;          // low masks sorted by popcount
  std::array<std::size_t, 66> lo_group_{};       // offsets into lo_order_ per popcount
  std::vector<Mask> lo_sorted_;                  // row unions of lo_order_
  std::vector<Mask> hi_;                         // row unions of the high bits
  std::vector<Mask> scratch_;
};

}  // namespace rsumlab
