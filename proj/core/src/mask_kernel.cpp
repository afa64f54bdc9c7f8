#include "rsumlab/mask_kernel.hpp"

#include <algorithm>
#include <numeric>

#include "rsumlab/error.hpp"

namespace rsumlab {

namespace {

constexpr unsigned kMaxDenseBits = 24;
constexpr unsigned kLowBits = 12;

Mask next_combination(Mask m, unsigned n) {
  const Mask c = m & (~m + 1);
  const Mask r = m + c;
  if (r == 0) return 0;
  const Mask next = (((r ^ m) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return 0;
  return next;
}

template <typename Fn>
void for_each_combination(unsigned n, std::size_t k, Fn&& fn) {
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  Mask m = k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1;
  while (m != 0) {
    fn(m);
    m = next_combination(m, n);
  }
}

}  // namespace

SumsetRows build_rows(const MaskGroup& mg, Mask a, Mask s, std::int64_t lambda) {
  SumsetRows rows;
  rows.n = mg.order();
  const auto& g = mg.group();
  for (Index b = 0; b < rows.n; ++b) {
    Mask r = mg.translate(a, b);
    if (s) r &= ~mg.translate(s, g.scale(lambda, b));
    rows.row[b] = r;
  }
  return rows;
}

Mask mask_sumset(const MaskGroup& mg, Mask a, Mask b) {
  return build_rows(mg, a, 0).evaluate(b);
}

Mask mask_restricted_sumset(const MaskGroup& mg, Mask a, Mask b) {
  return build_rows(mg, a, 1).evaluate(b);
}

Mask mask_generalized_sumset(const MaskGroup& mg, Mask a, Mask b, Mask s) {
  return build_rows(mg, a, s).evaluate(b);
}

Mask mask_twisted_sumset(const MaskGroup& mg, Mask a, Mask b, Mask s, std::int64_t gamma) {
  return build_rows(mg, a, s, 1 + gamma).evaluate(b);
}

SubsetSweep::SubsetSweep(unsigned n, SizeRange b_sizes)
    : n_(n), b_lo_(b_sizes.min), b_hi_(b_sizes.effective_max(n)) {
  if (n == 0 || n > 64) throw DomainError("subset sweep needs 1 <= n <= 64");
  unsigned __int128 weighted = 0;
  for (std::size_t k = b_lo_; k <= b_hi_; ++k) weighted += static_cast<unsigned __int128>(binomial(n, k)) * (k + 1);
  dense_ = n <= kMaxDenseBits && weighted * 2 >= (static_cast<unsigned __int128>(1) << n);
  if (!dense_) return;

  lo_bits_ = std::min(n, kLowBits);
  const std::uint32_t lo_count = std::uint32_t{1} << lo_bits_;
  lo_order_.resize(lo_count);
  std::iota(lo_order_.begin(), lo_order_.end(), 0u);
  std::stable_sort(lo_order_.begin(), lo_order_.end(), [](std::uint32_t x, std::uint32_t y) {
    return std::popcount(x) < std::popcount(y);
  });
  lo_group_.fill(lo_count);
  for (std::size_t i = lo_count; i-- > 0;) {
    lo_group_[static_cast<std::size_t>(std::popcount(lo_order_[i]))] = i;
  }
  // Empty popcount classes start where the next class starts.
  for (std::size_t k = lo_bits_ + 1; k-- > 0;) {
    if (lo_group_[k] == lo_count && k + 1 <= lo_bits_) lo_group_[k] = lo_group_[k + 1];
  }
  lo_group_[lo_bits_ + 1] = lo_count;
  lo_sorted_.resize(lo_count);
  scratch_.resize(lo_count);
  hi_.resize(std::size_t{1} << (n - lo_bits_));
}

std::uint64_t SubsetSweep::count_of_size(std::size_t k) const {
  return k >= b_lo_ && k <= b_hi_ ? binomial(n_, k) : 0;
}

void SubsetSweep::build_tables(const SumsetRows& rows) {
  const std::size_t lo_count = scratch_.size();
  scratch_[0] = 0;
  for (std::size_t j = 1; j < lo_count; ++j) {
    scratch_[j] = scratch_[j & (j - 1)] | rows.row[static_cast<unsigned>(std::countr_zero(j))];
  }
  for (std::size_t i = 0; i < lo_count; ++i) lo_sorted_[i] = scratch_[lo_order_[i]];
  hi_[0] = 0;
  for (std::size_t h = 1; h < hi_.size(); ++h) {
    hi_[h] = hi_[h & (h - 1)] | rows.row[lo_bits_ + static_cast<unsigned>(std::countr_zero(h))];
  }
}

void SubsetSweep::min_by_size(const SumsetRows& rows, std::span<std::uint8_t, 65> out) {
  std::fill(out.begin(), out.end(), std::uint8_t{255});
  if (!dense_) {
    for (std::size_t k = b_lo_; k <= b_hi_; ++k) {
      unsigned best = 255;
      for_each_combination(n_, k, [&](Mask b) {
        best = std::min(best, static_cast<unsigned>(std::popcount(rows.evaluate(b))));
      });
      out[k] = static_cast<std::uint8_t>(best);
    }
    return;
  }
  build_tables(rows);
  const Mask* lo = lo_sorted_.data();
  for (std::size_t h = 0; h < hi_.size(); ++h) {
    const Mask hm = hi_[h];
    const auto hs = static_cast<std::size_t>(std::popcount(h));
    for (std::size_t k = 0; k <= lo_bits_; ++k) {
      const std::size_t total = hs + k;
      if (total < b_lo_ || total > b_hi_) continue;
      unsigned best = 255;
      for (std::size_t i = lo_group_[k], e = lo_group_[k + 1]; i < e; ++i) {
        const auto v = static_cast<unsigned>(std::popcount(lo[i] | hm));
        best = v < best ? v : best;
      }
      if (best < out[total]) out[total] = static_cast<std::uint8_t>(best);
    }
  }
}

void SubsetSweep::for_each(const SumsetRows& rows, const std::function<void(Mask, unsigned)>& fn) {
  if (!dense_) {
    for (std::size_t k = b_lo_; k <= b_hi_; ++k) {
      for_each_combination(n_, k, [&](Mask b) {
        fn(b, static_cast<unsigned>(std::popcount(rows.evaluate(b))));
      });
    }
    return;
  }
  build_tables(rows);
  for (std::size_t h = 0; h < hi_.size(); ++h) {
    const Mask hm = hi_[h];
    const auto hs = static_cast<std::size_t>(std::popcount(h));
    for (std::size_t k = 0; k <= lo_bits_; ++k) {
      const std::size_t total = hs + k;
      if (total < b_lo_ || total > b_hi_) continue;
      for (std::size_t i = lo_group_[k], e = lo_group_[k + 1]; i < e; ++i) {
        const Mask b = (static_cast<Mask>(h) << lo_bits_) | lo_order_[i];
        fn(b, static_cast<unsigned>(std::popcount(lo_sorted_[i] | hm)));
      }
    }
  }
}

}  // namespace rsumlab
