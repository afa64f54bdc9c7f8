#include "rsumlab/enumerate.hpp"

#include <algorithm>
#include <queue>

#include "rsumlab/error.hpp"

namespace rsumlab {

namespace {

constexpr unsigned kDenseSubsetBits = 24;

// Next mask with the same popcount (Gosper's hack); 0 when exhausted.
Mask next_combination(Mask m, unsigned n) {
  const Mask c = m & (~m + 1);
  const Mask r = m + c;
  if (r == 0) return 0;
  const Mask next = (((r ^ m) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return 0;
  return next;
}

Mask first_combination(std::size_t k) {
  return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

void EnumerationPlan::validate() const {
  const auto n = group.order();
  auto check = [&](const SizeRange& r, const char* name) {
    if (r.min > n) throw DomainError(std::string(name) + " minimum size exceeds the group order");
    if (r.max != SizeRange::kUpToOrder && r.max > n) {
      throw DomainError(std::string(name) + " maximum size exceeds the group order");
    }
    if (r.min > r.effective_max(n)) throw DomainError(std::string(name) + " size range is empty");
  };
  check(a_size, "A");
  check(b_size, "B");
  check(s_size, "S");
  if (a_size.min == 0 || (!diagonal && b_size.min == 0)) {
    throw DomainError("A and B must be nonempty (minimum size >= 1)");
  }
  if (sampled && sampled->count < 1) throw DomainError("sample count must be >= 1");
  if (fixed_s && !(fixed_s->group() == group)) throw DomainError("fixed S belongs to another group");
}

void for_each_subset_mask(unsigned n, SizeRange sizes, const std::function<void(Mask)>& fn) {
  if (n > 64) throw DomainError("subset masks need n <= 64");
  const std::size_t lo = sizes.min;
  const std::size_t hi = sizes.effective_max(n);
  if (lo > hi) return;
  if (n <= kDenseSubsetBits) {
    const Mask end = Mask{1} << n;
    for (Mask m = 0; m < end; ++m) {
      const auto k = static_cast<std::size_t>(std::popcount(m));
      if (k >= lo && k <= hi) fn(m);
    }
    return;
  }
  // Merge the per-size combination streams into increasing order.
  std::priority_queue<Mask, std::vector<Mask>, std::greater<>> heads;
  for (std::size_t k = lo; k <= hi; ++k) heads.push(first_combination(k));
  while (!heads.empty()) {
    const Mask m = heads.top();
    heads.pop();
    fn(m);
    if (m != 0) {
      const Mask nx = next_combination(m, n);
      if (nx != 0) heads.push(nx);
    }
  }
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform and platform independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

SplitMix64 SplitMix64::split(std::uint64_t key) const {
  SplitMix64 mixer(state_ ^ (key * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
  return SplitMix64(mixer.next());
}

ElementSet sample_subset(const GroupSpec& g, std::size_t size, SplitMix64& rng) {
  const auto n = g.order();
  if (size > n) throw DomainError("sample size exceeds the group order");
  ElementSet out(g);
  for (std::uint64_t j = n - size; j < n; ++j) {
    const auto t = rng.below(j + 1);
    out.insert(out.contains(t) ? j : t);
  }
  return out;
}

ElementSet min_translate(const ElementSet& s, Index* shift) {
  if (s.empty()) {
    if (shift) *shift = 0;
    return s;
  }
  const auto& g = s.group();
  std::optional<ElementSet> best;
  Index best_t = 0;
  s.for_each([&](Index a) {
    const Index t = g.neg(a);
    ElementSet c = translate(s, t);
    if (!best || c < *best || (c == *best && t < best_t)) {
      best = std::move(c);
      best_t = t;
    }
  });
  if (shift) *shift = best_t;
  return *best;
}

Triple canonical_form(const Triple& t, bool diagonal, bool s_fixed) {
  Index ta = 0;
  ElementSet a = min_translate(t.a, &ta);
  if (diagonal || s_fixed || t.s.empty()) {
    return Triple{std::move(a), translate(t.b, ta), t.s};
  }
  Index us = 0;
  ElementSet s = min_translate(t.s, &us);
  const auto& g = t.a.group();
  // g - h = us with g = ta.
  const Index h = g.sub(ta, us);
  return Triple{std::move(a), translate(t.b, h), std::move(s)};
}

std::vector<Mask> plan_s_masks(const EnumerationPlan& plan, const MaskGroup& mg) {
  std::vector<Mask> out;
  if (plan.fixed_s) {
    out.push_back(plan.fixed_s->mask());
    return out;
  }
  for_each_subset_mask(mg.order(), plan.s_size, [&](Mask s) {
    if (plan.canonicalize && !plan.diagonal && s != 0 && !mg.is_min_translate(s)) return;
    out.push_back(s);
  });
  return out;
}

namespace {

void exhaustive(const EnumerationPlan& plan, Shard shard,
                const std::function<void(const Triple&)>& visit) {
  const auto& g = plan.group;
  if (g.order() > 64) throw DomainError("exhaustive enumeration needs a group of order <= 64");
  const MaskGroup mg(g);
  const auto ss = plan_s_masks(plan, mg);
  std::vector<Mask> bs;
  if (!plan.diagonal) for_each_subset_mask(mg.order(), plan.b_size, [&](Mask b) { bs.push_back(b); });
  std::uint64_t rank = 0;
  for_each_subset_mask(mg.order(), plan.a_size, [&](Mask a) {
    if (plan.canonicalize && !mg.is_min_translate(a)) return;
    if (rank++ % shard.count != shard.index) return;
    const auto aset = ElementSet::from_mask(g, a);
    for (Mask s : ss) {
      const auto sset = ElementSet::from_mask(g, s);
      if (plan.diagonal) {
        visit(Triple{aset, aset, sset});
        continue;
      }
      for (Mask b : bs) visit(Triple{aset, ElementSet::from_mask(g, b), sset});
    }
  });
}

void sampled(const EnumerationPlan& plan, Shard shard,
             const std::function<void(const Triple&)>& visit) {
  const auto& g = plan.group;
  const auto n = g.order();
  const SplitMix64 base(plan.sampled->seed);
  auto pick_size = [&](SplitMix64& rng, const SizeRange& r) {
    const auto hi = r.effective_max(n);
    return r.min + static_cast<std::size_t>(rng.below(hi - r.min + 1));
  };
  for (std::uint64_t j = shard.index; j < plan.sampled->count; j += shard.count) {
    SplitMix64 rng = base.split(j);
    ElementSet a = sample_subset(g, pick_size(rng, plan.a_size), rng);
    ElementSet b = plan.diagonal ? a : sample_subset(g, pick_size(rng, plan.b_size), rng);
    ElementSet s = plan.fixed_s ? *plan.fixed_s : sample_subset(g, pick_size(rng, plan.s_size), rng);
    Triple t{std::move(a), std::move(b), std::move(s)};
    if (plan.canonicalize) t = canonical_form(t, plan.diagonal, plan.fixed_s.has_value());
    visit(t);
  }
}

}  // namespace

void for_each_triple(const EnumerationPlan& plan, Shard shard,
                     const std::function<void(const Triple&)>& visit) {
  plan.validate();
  if (shard.count == 0 || shard.index >= shard.count) throw DomainError("invalid shard");
  if (plan.sampled) {
    sampled(plan, shard, visit);
  } else {
    exhaustive(plan, shard, visit);
  }
}

std::vector<Triple> collect_triples(const EnumerationPlan& plan, Shard shard) {
  std::vector<Triple> out;
  for_each_triple(plan, shard, [&](const Triple& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_triples(const EnumerationPlan& plan) {
  plan.validate();
  if (plan.sampled) return plan.sampled->count;
  const auto& g = plan.group;
  if (g.order() > 64) throw DomainError("exhaustive enumeration needs a group of order <= 64");
  const MaskGroup mg(g);
  const auto n = g.order();
  std::uint64_t a_count = 0;
  for_each_subset_mask(mg.order(), plan.a_size, [&](Mask a) {
    if (!plan.canonicalize || mg.is_min_translate(a)) ++a_count;
  });
  const auto s_count = static_cast<std::uint64_t>(plan_s_masks(plan, mg).size());
  std::uint64_t b_count = 1;
  if (!plan.diagonal) {
    b_count = 0;
    for (std::size_t k = plan.b_size.min; k <= plan.b_size.effective_max(n); ++k) {
      b_count += binomial(n, k);
    }
  }
  const unsigned __int128 total = static_cast<unsigned __int128>(a_count) * s_count * b_count;
  return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                            : static_cast<std::uint64_t>(total);
}

}  // namespace rsumlab
