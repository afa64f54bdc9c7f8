#include "rsumlab/mask_group.hpp"

#include "rsumlab/error.hpp"

namespace rsumlab {

MaskGroup::MaskGroup(const GroupSpec& g)
    : group_(g), n_(static_cast<unsigned>(g.order())), cyclic_(g.rank() == 1) {
  if (g.order() > 64) throw DomainError("word-sized sets need a group of order <= 64");
  full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  add_.resize(std::size_t{n_} * n_);
  neg_.resize(n_);
  for (Index a = 0; a < n_; ++a) {
    neg_[a] = static_cast<std::uint8_t>(g.neg(a));
    for (Index b = 0; b < n_; ++b) add_[a * n_ + b] = static_cast<std::uint8_t>(g.add(a, b));
  }
  if (!cyclic_) {
    bytes_ = (n_ + 7) / 8;
    table_.assign(std::size_t{n_} * bytes_ * 256, 0);
    for (Index t = 0; t < n_; ++t) {
      for (unsigned k = 0; k < bytes_; ++k) {
        Mask* row = &table_[(t * bytes_ + k) * 256];
        for (unsigned v = 0; v < 256; ++v) {
          Mask out = 0;
          for (unsigned bit = 0; bit < 8; ++bit) {
            const unsigned x = 8 * k + bit;
            if (((v >> bit) & 1u) && x < n_) out |= Mask{1} << add(x, t);
          }
          row[v] = out;
        }
      }
    }
  }
}

Mask MaskGroup::negate(Mask m) const {
  Mask out = 0;
  while (m) {
    out |= Mask{1} << neg_[static_cast<unsigned>(std::countr_zero(m))];
    m &= m - 1;
  }
  return out;
}

Mask MaskGroup::scale(Mask m, std::int64_t u) const {
  Mask out = 0;
  while (m) {
    out |= Mask{1} << group_.scale(u, static_cast<Index>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask MaskGroup::min_translate(Mask m, Index* shift) const {
  Mask best = m;
  Index best_t = 0;
  if (m == 0) {
    if (shift) *shift = 0;
    return 0;
  }
  // A minimal translate contains 0, so only shifts by -a for a in m compete.
  bool first = true;
  for (Mask rest = m; rest; rest &= rest - 1) {
    const Index t = neg_[static_cast<unsigned>(std::countr_zero(rest))];
    const Mask c = translate(m, t);
    if (first || c < best || (c == best && t < best_t)) {
      best = c;
      best_t = t;
      first = false;
    }
  }
  if (shift) *shift = best_t;
  return best;
}

bool MaskGroup::is_min_translate(Mask m) const {
  if (m == 0) return true;
  // The minimum translate always contains element 0.
  if (!(m & 1u)) return false;
  for (Mask rest = m & (m - 1); rest; rest &= rest - 1) {
    if (translate(m, neg_[static_cast<unsigned>(std::countr_zero(rest))]) < m) return false;
  }
  return true;
}

}  // namespace rsumlab
