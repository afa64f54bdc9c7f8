#pragma once

// Brute-force reference implementations. Deliberately share nothing with the
// library: elements are coordinate vectors, sets are std::set, sums are
// double loops.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Elem = std::vector<int>;
using Set = std::set<Elem>;

struct Group {
  std::vector<int> n;

  int order() const {
    int o = 1;
    for (int f : n) o *= f;
    return o;
  }
  int least_prime() const {
    const int o = order();
    for (int d = 2; d <= o; ++d) {
      if (o % d == 0) return d;
    }
    return 0;
  }
  Elem zero() const { return Elem(n.size(), 0); }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) c[i] = (a[i] + b[i]) % n[i];
    return c;
  }
  Elem neg(const Elem& a) const {
    Elem c(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) c[i] = (n[i] - a[i]) % n[i];
    return c;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(long u, const Elem& a) const {
    Elem c(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      c[i] = static_cast<int>(((u % n[i] + n[i]) % n[i]) * a[i] % n[i]);
    }
    return c;
  }
  // Row-major listing: first coordinate slowest.
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    Elem e = zero();
    for (int k = 0; k < order(); ++k) {
      out.push_back(e);
      for (int i = static_cast<int>(n.size()) - 1; i >= 0; --i) {
        if (++e[i] < n[i]) break;
        e[i] = 0;
      }
    }
    return out;
  }
  // Position of e in elements().
  std::uint64_t position(const Elem& e) const {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < n.size(); ++i) p = p * n[i] + e[i];
    return p;
  }
};

// {a + b : a in A, b in B, a - gamma*b not in S}; S empty is the plain sumset.
inline Set gsum(const Group& g, const Set& a, const Set& b, const Set& s, long gamma = 1) {
  Set out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (!s.count(g.sub(x, g.mul(gamma, y)))) out.insert(g.add(x, y));
    }
  }
  return out;
}

inline Set sum(const Group& g, const Set& a, const Set& b) { return gsum(g, a, b, {}); }
inline Set rsum(const Group& g, const Set& a, const Set& b) { return gsum(g, a, b, {g.zero()}); }

inline Set shift(const Group& g, const Set& a, const Elem& t) {
  Set out;
  for (const auto& x : a) out.insert(g.add(x, t));
  return out;
}

inline Set neg(const Group& g, const Set& a) {
  Set out;
  for (const auto& x : a) out.insert(g.neg(x));
  return out;
}

inline Set mul(const Group& g, const Set& a, long u) {
  Set out;
  for (const auto& x : a) out.insert(g.mul(u, x));
  return out;
}

inline bool closed(const Group& g, const Set& h) {
  if (!h.count(g.zero())) return false;
  for (const auto& x : h) {
    for (const auto& y : h) {
      if (!h.count(g.sub(x, y))) return false;
    }
  }
  return true;
}

// Every subgroup, by testing all subsets that contain 0 (order <= 16).
inline std::vector<Set> subgroups(const Group& g) {
  const auto els = g.elements();
  std::vector<Set> out;
  const int n = g.order();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); m += 2) {
    Set h;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1) h.insert(els[i]);
    }
    if (n % static_cast<int>(h.size()) == 0 && closed(g, h)) out.push_back(h);
  }
  return out;
}

inline Set stabilizer(const Group& g, const Set& x) {
  Set h;
  for (const auto& t : g.elements()) {
    if (shift(g, x, t) == x) h.insert(t);
  }
  return h;
}

inline Set from_mask(const Group& g, std::uint64_t m) {
  const auto els = g.elements();
  Set out;
  for (int i = 0; i < g.order(); ++i) {
    if ((m >> i) & 1) out.insert(els[i]);
  }
  return out;
}

inline std::uint64_t to_mask(const Group& g, const Set& s) {
  std::uint64_t m = 0;
  for (const auto& x : s) m |= std::uint64_t{1} << g.position(x);
  return m;
}

// Maximum bipartite matching by exhaustive augmentation over subsets of the
// left side (left <= 16).
inline std::size_t max_matching(std::size_t left, std::size_t right,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  // dp over left vertices with the set of used right vertices (right <= 16)
  std::map<std::uint32_t, std::size_t> best{{0u, 0}};
  for (std::size_t u = 0; u < left; ++u) {
    std::map<std::uint32_t, std::size_t> next = best;
    for (const auto& [used, val] : best) {
      for (const auto& [x, y] : edges) {
        if (x != u || (used >> y) & 1u) continue;
        const auto key = used | (1u << y);
        auto& slot = next[key];
        slot = std::max(slot, val + 1);
      }
    }
    best = std::move(next);
  }
  std::size_t m = 0;
  for (const auto& [k, v] : best) m = std::max(m, v);
  return m;
}

// Abelian groups of order <= max_order up to isomorphism, as invariant
// factor lists (each factor divides the next).
inline std::vector<std::vector<int>> groups_up_to(int max_order) {
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& f, int order) {
    if (!f.empty()) out.push_back(f);
    const int start = f.empty() ? 2 : f.back();
    for (int k = start; order * k <= max_order; k += f.empty() ? 1 : f.back()) {
      if (!f.empty() && k % f.back() != 0) continue;
      f.push_back(k);
      grow(f, order * k);
      f.pop_back();
    }
  };
  std::vector<int> f;
  grow(f, 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const auto ox = std::accumulate(x.begin(), x.end(), 1, std::multiplies<>());
    const auto oy = std::accumulate(y.begin(), y.end(), 1, std::multiplies<>());
    return ox != oy ? ox < oy : x < y;
  });
  return out;
}

}  // namespace oracle
