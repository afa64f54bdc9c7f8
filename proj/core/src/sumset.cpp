#include "rsumlab/sumset.hpp"

#include "rsumlab/error.hpp"

namespace rsumlab {

namespace {

void require_operands(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  if (a.empty() || b.empty()) throw DomainError("sumset operands must be nonempty");
}

template <typename Keep>
ElementSet pair_sums(const ElementSet& a, const ElementSet& b, Keep keep) {
  const auto& g = a.group();
  ElementSet out(g);
  a.for_each([&](Index x) {
    b.for_each([&](Index y) {
      if (keep(x, y)) out.insert(g.add(x, y));
    });
  });
  return out;
}

}  // namespace

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
  require_operands(a, b);
  return pair_sums(a, b, [](Index, Index) { return true; });
}

ElementSet restricted_sumset(const ElementSet& a, const ElementSet& b) {
  require_operands(a, b);
  return pair_sums(a, b, [](Index x, Index y) { return x != y; });
}

ElementSet generalized_restricted_sumset(const ElementSet& a, const ElementSet& b,
                                         const ElementSet& s) {
  require_operands(a, b);
  require_same_group(a, s);
  const auto& g = a.group();
  return pair_sums(a, b, [&](Index x, Index y) { return !s.contains(g.sub(x, y)); });
}

ElementSet twisted_restricted_sumset(const ElementSet& a, const ElementSet& b, const ElementSet& s,
                                     std::int64_t gamma) {
  require_operands(a, b);
  require_same_group(a, s);
  const auto& g = a.group();
  if (!g.is_prime_cyclic()) {
    throw DomainError("twisted sumset needs a prime cyclic group, got " + g.to_string());
  }
  const auto p = static_cast<std::int64_t>(g.order());
  if (gamma % p == 0) throw DomainError("twist gamma must be nonzero modulo " + std::to_string(p));
  return pair_sums(a, b, [&](Index x, Index y) { return !s.contains(g.sub(x, g.scale(gamma, y))); });
}

ElementSet evaluate(const SumsetQuery& q) {
  if (q.twist) return twisted_restricted_sumset(q.a, q.b, q.s, *q.twist);
  return generalized_restricted_sumset(q.a, q.b, q.s);
}

}  // namespace rsumlab
