#include "rsumlab/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rsumlab/error.hpp"
#include "rsumlab/matching.hpp"
#include "rsumlab/sumset.hpp"

namespace rsumlab {

namespace {

void require_member_group(const ElementSet& x, const Subgroup& h) {
  if (!(x.group() == h.group())) throw DomainError("set and subgroup belong to different groups");
}

Index coset_min(const GroupSpec& g, Index x, const Subgroup& h) {
  Index best = x;
  h.members().for_each([&](Index k) { best = std::min(best, g.add(x, k)); });
  return best;
}

}  // namespace

ElementSet CosetDecomposition::rebuild() const {
  ElementSet out(subgroup.group());
  for (const auto& part : parts) out = set_union(out, translate(part.fiber, part.representative));
  return out;
}

CosetDecomposition coset_decompose(const ElementSet& x, const Subgroup& h) {
  require_member_group(x, h);
  if (x.empty()) throw DomainError("cannot decompose the empty set");
  const auto& g = x.group();
  std::map<Index, ElementSet> fibers;
  x.for_each([&](Index e) {
    const Index rep = coset_min(g, e, h);
    auto it = fibers.try_emplace(rep, g).first;
    it->second.insert(g.sub(e, rep));
  });
  CosetDecomposition out{h, {}};
  for (auto& [rep, fiber] : fibers) out.parts.push_back(CosetPart{rep, std::move(fiber)});
  std::stable_sort(out.parts.begin(), out.parts.end(), [](const CosetPart& l, const CosetPart& r) {
    return l.fiber.size() > r.fiber.size();
  });
  return out;
}

Subgroup stabilizer(const ElementSet& x) {
  if (x.empty()) throw DomainError("stabilizer of the empty set is undefined");
  const auto& g = x.group();
  const Index x0 = x.min();
  ElementSet period(g);
  x.for_each([&](Index y) {
    const Index t = g.sub(y, x0);
    if (translate(x, t) == x) period.insert(t);
  });
  return Subgroup(std::move(period));
}

// ---- distinct representatives -----------------------------------------------

const char* sdr_variant_name(SdrVariant v) {
  switch (v) {
    case SdrVariant::PrimeWindow: return "prime";
    case SdrVariant::TripleWindow: return "triple";
    case SdrVariant::Unrestricted: return "plain";
  }
  return "?";
}

std::optional<SdrVariant> parse_sdr_variant(std::string_view name) {
  if (name == "prime") return SdrVariant::PrimeWindow;
  if (name == "triple") return SdrVariant::TripleWindow;
  if (name == "plain") return SdrVariant::Unrestricted;
  return std::nullopt;
}

namespace {

void check_elements(const SdrInstance& inst) {
  const auto n = inst.group.order();
  for (const auto* list : {&inst.a, &inst.b}) {
    std::set<Index> seen;
    for (Index e : *list) {
      if (e >= n) throw DomainError("element index out of range");
      if (!seen.insert(e).second) throw DomainError("repeated element in an ordered set");
    }
  }
  if (inst.a.empty() || inst.b.empty()) throw DomainError("A and B must be nonempty");
  if (!(inst.s.group() == inst.group)) throw DomainError("S belongs to another group");
}

void fail(const std::string& what) { throw HypothesisViolation(what); }

std::size_t first_position(const SdrInstance& inst) {
  return inst.variant == SdrVariant::Unrestricted ? 2 : 1;
}

}  // namespace

void check_sdr_hypotheses(const SdrInstance& inst) {
  check_elements(inst);
  const auto m = inst.a.size();
  const auto n = inst.b.size();
  const auto h = inst.s.size();
  const auto p = inst.group.least_prime();
  switch (inst.variant) {
    case SdrVariant::PrimeWindow:
      if (!inst.group.is_prime_cyclic()) fail("group is not of prime order");
      if (h == 0) fail("S must be nonempty");
      if (h >= p) fail("|S| must be below p");
      if (m < h + 3) fail("needs |A| >= |S| + 3");
      if (m + n - h - 2 > p) fail("needs |A| + |B| - |S| - 2 <= p");
      break;
    case SdrVariant::TripleWindow:
      if (h == 0) fail("S must be nonempty");
      if (h >= p) fail("|S| must be below p(G)");
      if (m < 3 * h + 1) fail("needs |A| >= 3|S| + 1");
      if (m + n - 3 * h > p) fail("needs |A| + |B| - 3|S| <= p(G)");
      break;
    case SdrVariant::Unrestricted:
      if (m + n - 1 > p) fail("needs |A| + |B| - 1 <= p(G)");
      break;
  }
}

std::size_t sdr_length(const SdrInstance& inst) {
  const auto m = inst.a.size();
  const auto h = inst.s.size();
  switch (inst.variant) {
    case SdrVariant::PrimeWindow: return m >= h + 2 ? m - h - 2 : 0;
    case SdrVariant::TripleWindow: return m >= 3 * h ? m - 3 * h : 0;
    case SdrVariant::Unrestricted: return m - 1;
  }
  return 0;
}

std::vector<std::size_t> sdr_window(const SdrInstance& inst, std::size_t k) {
  const auto h = inst.s.size();
  std::vector<std::size_t> w;
  switch (inst.variant) {
    case SdrVariant::PrimeWindow:
      for (std::size_t i = 2; i <= h + 2; ++i) w.push_back(i);
      w.push_back(k + h + 2);
      break;
    case SdrVariant::TripleWindow:
      for (std::size_t i = 2; i <= 3 * h; ++i) w.push_back(i);
      w.push_back(k + 3 * h);
      break;
    case SdrVariant::Unrestricted:
      w.push_back(k);
      break;
  }
  return w;
}

namespace {

struct PairChoice {
  std::size_t i;
  std::size_t j;
};

bool restricted(SdrVariant v) { return v != SdrVariant::Unrestricted; }

}  // namespace

SdrSolution sdr_select(const SdrInstance& inst) {
  check_sdr_hypotheses(inst);
  const auto& g = inst.group;
  const auto len = sdr_length(inst);
  const auto k0 = first_position(inst);
  ElementSet excluded(g);
  for (Index bj : inst.b) excluded.insert(g.add(inst.a[0], bj));

  BipartiteGraph graph(len, g.order());
  std::vector<std::map<Index, PairChoice>> choice(len);
  for (std::size_t pos = 0; pos < len; ++pos) {
    auto& by_sum = choice[pos];
    for (std::size_t i : sdr_window(inst, k0 + pos)) {
      const Index ai = inst.a[i - 1];
      for (std::size_t j = 1; j <= inst.b.size(); ++j) {
        const Index bj = inst.b[j - 1];
        if (restricted(inst.variant) && inst.s.contains(g.sub(ai, bj))) continue;
        const Index x = g.add(ai, bj);
        if (excluded.contains(x)) continue;
        by_sum.try_emplace(x, PairChoice{i, j});
      }
    }
    for (const auto& [x, pc] : by_sum) graph.add_edge(pos, x);
  }
  const Matching mt = maximum_matching(graph);
  if (mt.size < len) {
    throw LemmaViolation("no system of distinct representatives: matched " + std::to_string(mt.size) +
                         " of " + std::to_string(len) + " positions");
  }
  SdrSolution sol{inst.variant, {}};
  for (std::size_t pos = 0; pos < len; ++pos) {
    const Index x = mt.left_to_right[pos];
    const auto& pc = choice[pos].at(x);
    sol.pairs.push_back(SdrPair{k0 + pos, pc.i, pc.j, x});
  }
  return sol;
}

std::optional<std::string> sdr_defect(const SdrInstance& inst, const SdrSolution& sol) {
  const auto& g = inst.group;
  const auto len = sdr_length(inst);
  const auto k0 = first_position(inst);
  if (sol.variant != inst.variant) return "variant mismatch";
  if (sol.pairs.size() != len) {
    return "expected " + std::to_string(len) + " pairs, got " + std::to_string(sol.pairs.size());
  }
  std::set<Index> sums;
  for (std::size_t pos = 0; pos < len; ++pos) {
    const auto& pr = sol.pairs[pos];
    const auto at = "position " + std::to_string(k0 + pos) + ": ";
    if (pr.k != k0 + pos) return at + "wrong position label";
    const auto w = sdr_window(inst, pr.k);
    if (std::find(w.begin(), w.end(), pr.i) == w.end()) return at + "index i outside its window";
    if (pr.i < 1 || pr.i > inst.a.size() || pr.j < 1 || pr.j > inst.b.size()) return at + "index out of range";
    const Index ai = inst.a[pr.i - 1];
    const Index bj = inst.b[pr.j - 1];
    if (g.add(ai, bj) != pr.sum) return at + "sum does not match its pair";
    if (restricted(inst.variant) && inst.s.contains(g.sub(ai, bj))) return at + "difference lies in S";
    for (Index b : inst.b) {
      if (g.add(inst.a[0], b) == pr.sum) return at + "sum lies in a_1 + B";
    }
    if (!sums.insert(pr.sum).second) return at + "repeated sum";
  }
  return std::nullopt;
}

// ---- critical pairs ---------------------------------------------------------

namespace {

bool is_progression(const ElementSet& x, Index q) {
  const auto& g = x.group();
  const auto k = x.size();
  if (k == 1) return true;
  std::size_t starts = 0;
  Index start = 0;
  x.for_each([&](Index e) {
    if (!x.contains(g.sub(e, q))) {
      ++starts;
      start = e;
    }
  });
  if (starts == 0) return g.element_order(q) == k;
  if (starts > 1) return false;
  Index e = start;
  for (std::size_t i = 0; i < k; ++i) {
    if (!x.contains(e)) return false;
    e = g.add(e, q);
  }
  return true;
}

bool inside_coset(const ElementSet& x, const Subgroup& k) {
  const auto& g = x.group();
  const Index x0 = x.min();
  bool ok = true;
  x.for_each([&](Index e) { ok = ok && k.contains(g.sub(e, x0)); });
  return ok;
}

}  // namespace

std::vector<Index> progression_differences(const ElementSet& x) {
  if (x.empty()) throw DomainError("empty set is not a progression");
  std::vector<Index> out;
  for (Index q = 1; q < x.group().order(); ++q) {
    if (is_progression(x, q)) out.push_back(q);
  }
  return out;
}

bool is_critical_pair(const ElementSet& a, const ElementSet& b) {
  const auto sum = sumset(a, b).size();
  return sum + 1 == a.size() + b.size() && sum + 1 <= a.group().least_prime();
}

std::vector<StructureClass> classify_critical_pair(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  if (a.empty() || b.empty()) throw DomainError("critical pairs need nonempty sets");
  if (!is_critical_pair(a, b)) {
    throw HypothesisViolation("not a critical pair: need |A+B| = |A|+|B|-1 <= p(G)-1");
  }
  const auto& g = a.group();
  std::vector<StructureClass> out;
  if (a.size() == 1) out.emplace_back(SingletonClass{'A'});
  if (b.size() == 1) out.emplace_back(SingletonClass{'B'});

  const auto qa = progression_differences(a);
  const auto qb = progression_differences(b);
  std::vector<Index> common;
  std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(), std::back_inserter(common));
  if (!common.empty()) out.emplace_back(ArithmeticPairClass{common.front(), a.size(), b.size()});

  for (const auto& k : prime_order_subgroups(g)) {
    if (k.order() != g.least_prime()) continue;
    if (inside_coset(a, k) && inside_coset(b, k)) {
      out.emplace_back(CosetPairClass{k, coset_min(g, a.min(), k), coset_min(g, b.min(), k)});
    }
  }
  if (out.empty()) {
    throw EmptyClassification("critical pair " + format_set(a) + ", " + format_set(b) +
                              " matches no structural class");
  }
  return out;
}

bool class_holds(const StructureClass& c, const ElementSet& a, const ElementSet& b) {
  const auto& g = a.group();
  if (const auto* s = std::get_if<SingletonClass>(&c)) {
    return (s->side == 'A' ? a : b).size() == 1;
  }
  if (const auto* ap = std::get_if<ArithmeticPairClass>(&c)) {
    return ap->difference != 0 && ap->difference < g.order() && ap->k == a.size() && ap->l == b.size() &&
           is_progression(a, ap->difference) && is_progression(b, ap->difference);
  }
  const auto& cp = std::get<CosetPairClass>(c);
  const auto& k = cp.subgroup;
  if (!(k.group() == g) || k.order() != g.least_prime()) return false;
  bool ok = true;
  a.for_each([&](Index e) { ok = ok && k.contains(g.sub(e, cp.a_offset)); });
  b.for_each([&](Index e) { ok = ok && k.contains(g.sub(e, cp.b_offset)); });
  return ok;
}

std::string describe(const StructureClass& c, const GroupSpec& g) {
  if (const auto* s = std::get_if<SingletonClass>(&c)) return std::string("singleton(") + s->side + ")";
  if (const auto* ap = std::get_if<ArithmeticPairClass>(&c)) {
    return "arithmetic(q=" + format_element(g, ap->difference) + ",k=" + std::to_string(ap->k) +
           ",l=" + std::to_string(ap->l) + ")";
  }
  const auto& cp = std::get<CosetPairClass>(c);
  return "coset(K=" + format_set(cp.subgroup.members()) + ",a=" + format_element(g, cp.a_offset) +
         ",b=" + format_element(g, cp.b_offset) + ")";
}

// ---- fiber spread -------------------------------------------------------------

std::size_t cosets_meeting(const ElementSet& a, const Subgroup& k) {
  require_member_group(a, k);
  const auto& g = a.group();
  ElementSet reps(g);
  a.for_each([&](Index e) { reps.insert(coset_min(g, e, k)); });
  return reps.size();
}

FiberSpreadChecker::FiberSpreadChecker(const Subgroup& k1, const Subgroup& k2) : group_(k1.group()) {
  if (!(k1.group() == k2.group())) throw DomainError("subgroups belong to different groups");
  const auto& g = group_;
  if (k1.order() < 2 || k2.order() < 2) throw DomainError("direct summands must be nontrivial");
  if (set_intersection(k1.members(), k2.members()).size() != 1 || k1.order() * k2.order() != g.order()) {
    throw DomainError("subgroups do not form an internal direct sum of " + g.to_string());
  }
  rep1_.resize(g.order());
  rep2_.resize(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    rep1_[x] = coset_min(g, x, k1);
    rep2_[x] = coset_min(g, x, k2);
  }
}

namespace {

FiberSpread finish(std::size_t c1, std::size_t c2, std::size_t size) {
  const auto top = std::max(c1, c2);
  return FiberSpread{c1, c2, top * top >= size};
}

}  // namespace

FiberSpread FiberSpreadChecker::check(const ElementSet& a) const {
  if (!(a.group() == group_)) throw DomainError("set and subgroups belong to different groups");
  std::vector<char> seen1(group_.order()), seen2(group_.order());
  std::size_t c1 = 0, c2 = 0;
  a.for_each([&](Index x) {
    if (!seen1[rep1_[x]]) seen1[rep1_[x]] = 1, ++c1;
    if (!seen2[rep2_[x]]) seen2[rep2_[x]] = 1, ++c2;
  });
  return finish(c1, c2, a.size());
}

FiberSpread FiberSpreadChecker::check_mask(std::uint64_t a) const {
  if (group_.order() > 64) throw DomainError("bitmap form needs a group of order <= 64");
  std::uint64_t hit1 = 0, hit2 = 0;
  const auto size = static_cast<std::size_t>(std::popcount(a));
  while (a) {
    const auto x = static_cast<unsigned>(std::countr_zero(a));
    hit1 |= std::uint64_t{1} << rep1_[x];
    hit2 |= std::uint64_t{1} << rep2_[x];
    a &= a - 1;
  }
  return finish(static_cast<std::size_t>(std::popcount(hit1)), static_cast<std::size_t>(std::popcount(hit2)), size);
}

FiberSpread fiber_spread_check(const ElementSet& a, const Subgroup& k1, const Subgroup& k2) {
  require_member_group(a, k1);
  return FiberSpreadChecker(k1, k2).check(a);
}

}  // namespace rsumlab
