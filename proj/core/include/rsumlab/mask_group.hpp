#pragma once

// Word-sized view of a group of order <= 64: subsets are uint64_t bitmaps and
// translation is a rotation (cyclic groups) or a byte-table permutation.

#include <bit>
#include <cstdint>
#include <vector>

#include "rsumlab/group.hpp"

namespace rsumlab {

using Mask = std::uint64_t;

class MaskGroup {
 public:
  explicit MaskGroup(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  unsigned order() const { return n_; }
  Mask full() const { return full_; }

  Index add(Index a, Index b) const { return add_[a * n_ + b]; }
  Index neg(Index a) const { return neg_[a]; }

  /// {x + t : x in m}
  Mask translate(Mask m, Index t) const {
    if (cyclic_) {
      if (t == 0) return m;
      return ((m << t) | (m >> (n_ - t))) & full_;
    }
    const Mask* row = &table_[t * bytes_ * 256];
    Mask out = 0;
    for (unsigned k = 0; k < bytes_; ++k, row += 256) out |= row[(m >> (8 * k)) & 0xFF];
    return out;
  }
  Mask negate(Mask m) const;
  Mask scale(Mask m, std::int64_t u) const;

  /// Smallest bitmap among the translates of m that contain 0; `shift` receives the
  /// smallest t attaining it.
  Mask min_translate(Mask m, Index* shift = nullptr) const;
  /// True iff m == min_translate(m).
  bool is_min_translate(Mask m) const;

 private:
  GroupSpec group_;
  unsigned n_;
  Mask full_;
  bool cyclic_;
  unsigned bytes_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> neg_;
  std::vector<Mask> table_;
};

}  // namespace rsumlab
