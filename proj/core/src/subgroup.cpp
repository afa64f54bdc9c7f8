#include "rsumlab/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rsumlab/error.hpp"

namespace rsumlab {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsLess {
  bool operator()(const Bits& a, const Bits& b) const {
    for (std::size_t w = a.size(); w-- > 0;) {
      if (a[w] != b[w]) return a[w] < b[w];
    }
    return false;
  }
};

void set_bit(Bits& b, std::uint64_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

template <typename Fn>
void for_each_bit(const Bits& b, Fn&& fn) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t x = b[w];
    while (x) {
      fn(static_cast<std::uint64_t>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

// Subgroup lattice of an abelian group of order n with addition `add`:
// cyclic subgroups, then joins with cyclic subgroups until nothing new appears.
template <typename Add>
std::vector<Bits> lattice(std::uint64_t n, Add add) {
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::set<Bits, BitsLess> cyclic_set;
  for (std::uint64_t x = 0; x < n; ++x) {
    Bits c(words, 0);
    std::uint64_t s = 0;
    do {
      set_bit(c, s);
      s = add(s, x);
    } while (s != 0);
    cyclic_set.insert(std::move(c));
  }
  const std::vector<Bits> cyclic(cyclic_set.begin(), cyclic_set.end());
  std::set<Bits, BitsLess> seen(cyclic.begin(), cyclic.end());
  std::deque<Bits> work(cyclic.begin(), cyclic.end());
  while (!work.empty()) {
    Bits h = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclic) {
      Bits j(words, 0);
      for_each_bit(h, [&](std::uint64_t a) { for_each_bit(c, [&](std::uint64_t b) { set_bit(j, add(a, b)); }); });
      if (seen.insert(j).second) work.push_back(std::move(j));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Subgroup> filter(std::vector<Subgroup> all, auto pred) {
  std::erase_if(all, [&](const Subgroup& s) { return !pred(s); });
  return all;
}

}  // namespace

bool is_closed_subgroup(const ElementSet& s) {
  const auto& g = s.group();
  if (!s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Index a) {
    if (!ok) return;
    if (!s.contains(g.neg(a))) ok = false;
    s.for_each([&](Index b) {
      if (ok && !s.contains(g.add(a, b))) ok = false;
    });
  });
  return ok;
}

Subgroup::Subgroup(ElementSet members) : members_(std::move(members)) {
  if (!is_closed_subgroup(members_)) {
    throw DomainError("set " + format_set(members_) + " is not a subgroup of " +
                      members_.group().to_string());
  }
}

Subgroup Subgroup::trivial(const GroupSpec& g) {
  return Subgroup(ElementSet::from_indices(g, {0}), Trusted{});
}

Subgroup Subgroup::whole(const GroupSpec& g) { return Subgroup(ElementSet::full(g), Trusted{}); }

Subgroup Subgroup::generated_by(const GroupSpec& g, std::span<const Index> generators) {
  ElementSet members = ElementSet::from_indices(g, {0});
  std::vector<Index> frontier{0};
  while (!frontier.empty()) {
    const Index x = frontier.back();
    frontier.pop_back();
    for (auto gen : generators) {
      const Index y = g.add(x, gen);
      if (!members.contains(y)) {
        members.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup(std::move(members), Trusted{});
}

std::vector<Subgroup> all_subgroups(const GroupSpec& g, std::uint64_t ceiling) {
  std::vector<Subgroup> out;
  const auto n = g.order();
  if (g.rank() == 1) {
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      ElementSet m(g);
      for (std::uint64_t x = 0; x < n; x += d) m.insert(x);
      out.push_back(Subgroup(std::move(m), Subgroup::Trusted{}));
    }
  } else {
    if (n > ceiling) {
      throw DomainError("subgroup enumeration of " + g.to_string() + " exceeds the order ceiling " +
                        std::to_string(ceiling));
    }
    for (auto& bits : lattice(n, [&](std::uint64_t a, std::uint64_t b) { return g.add(a, b); })) {
      ElementSet m(g);
      for_each_bit(bits, [&](std::uint64_t i) { m.insert(i); });
      out.push_back(Subgroup(std::move(m), Subgroup::Trusted{}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members() < b.members(); });
  return out;
}

std::vector<Subgroup> prime_index_subgroups(const GroupSpec& g, std::uint64_t ceiling) {
  const auto target = g.order() / g.least_prime();
  return filter(all_subgroups(g, ceiling), [&](const Subgroup& s) { return s.order() == target; });
}

std::vector<Subgroup> prime_order_subgroups(const GroupSpec& g, std::uint64_t ceiling) {
  return filter(all_subgroups(g, ceiling), [](const Subgroup& s) { return is_prime(s.order()); });
}

Quotient::Quotient(const GroupSpec& g, const Subgroup& h, std::uint64_t ceiling)
    : group_(g), quotient_(g) {
  if (!(h.group() == g)) throw DomainError("subgroup belongs to a different group");
  const auto n = g.order();
  const auto q = n / h.order();
  if (q < 2) throw DomainError("quotient by the whole group is trivial");

  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  coset_of_.assign(n, kUnassigned);
  const auto hs = h.members().elements();
  for (Index x = 0; x < n; ++x) {
    if (coset_of_[x] != kUnassigned) continue;
    const auto c = representatives_.size();
    representatives_.push_back(x);
    for (auto y : hs) coset_of_[g.add(x, y)] = c;
  }

  if (g.rank() == 1) {
    // Cosets of the subgroup of order n/q in Z_n are the residues mod q.
    quotient_ = GroupSpec({q});
    image_of_coset_.resize(q);
    for (std::size_t c = 0; c < q; ++c) image_of_coset_[c] = representatives_[c];
    return;
  }
  if (q > ceiling) {
    throw DomainError("quotient of order " + std::to_string(q) + " exceeds the order ceiling " +
                      std::to_string(ceiling));
  }

  // Decompose Q = G/H into cyclic factors: an element of maximal order
  // generates a direct summand; find a complement in the lattice and recurse.
  auto qadd = [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(coset_of_[g.add(representatives_[a], representatives_[b])]);
  };
  auto qorder = [&](std::uint64_t x) {
    std::uint64_t k = 1;
    for (std::uint64_t s = x; s != 0; s = qadd(s, x)) ++k;
    return x == 0 ? std::uint64_t{1} : k;
  };
  const auto subgroups = lattice(q, qadd);
  const std::size_t words = static_cast<std::size_t>((q + 63) / 64);
  auto popcnt = [](const Bits& b) {
    std::uint64_t c = 0;
    for (auto w : b) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  };
  auto subset = [](const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (a[w] & ~b[w]) return false;
    }
    return true;
  };

  Bits current(words, 0);
  for (std::uint64_t i = 0; i < q; ++i) set_bit(current, i);
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> orders;
  while (popcnt(current) > 1) {
    std::uint64_t best = 0;
    std::uint64_t best_order = 0;
    for_each_bit(current, [&](std::uint64_t x) {
      const auto o = qorder(x);
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    });
    Bits cyc(words, 0);
    for (std::uint64_t s = 0, k = 0; k < best_order; ++k, s = qadd(s, best)) set_bit(cyc, s);
    const auto want = popcnt(current) / best_order;
    const Bits* complement = nullptr;
    for (const auto& d : subgroups) {
      if (popcnt(d) != want || !subset(d, current)) continue;
      bool meets_trivially = true;
      for (std::size_t w = 0; w < words; ++w) {
        auto both = d[w] & cyc[w];
        if (w == 0) both &= ~std::uint64_t{1};
        if (both) meets_trivially = false;
      }
      if (meets_trivially) {
        complement = &d;
        break;
      }
    }
    if (complement == nullptr) throw LemmaViolation("no complement for a maximal cyclic summand");
    gens.push_back(best);
    orders.push_back(best_order);
    current = *complement;
  }

  quotient_ = GroupSpec(orders);
  image_of_coset_.assign(q, 0);
  std::vector<std::uint64_t> digits(orders.size(), 0);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t k = orders.size(); k-- > 0;) {
      digits[k] = rem % orders[k];
      rem /= orders[k];
    }
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      for (std::uint64_t t = 0; t < digits[k]; ++t) c = qadd(c, gens[k]);
    }
    image_of_coset_[c] = idx;
  }
}

GroupElement Quotient::project(const GroupElement& x) const {
  return index_element(quotient_, project(element_index(group_, x)));
}

Quotient quotient(const GroupSpec& g, const Subgroup& h, std::uint64_t ceiling) {
  return Quotient(g, h, ceiling);
}

}  // namespace rsumlab
