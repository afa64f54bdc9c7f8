#include <catch_amalgamated.hpp>

#include <rsumlab/bounds.hpp>
#include <rsumlab/enumerate.hpp>
#include <rsumlab/error.hpp>

#include "bridge.hpp"
#include "matrix.hpp"

using namespace rsumlab;

namespace {

ElementSet set(const GroupSpec& g, const char* text) { return parse_set(g, text); }

ElementSet sized(const GroupSpec& g, std::size_t k) {
  ElementSet s(g);
  for (Index i = 0; i < k; ++i) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("bound formulas", "[bounds]") {
  CHECK(bound_value(BoundKind::ThreeS, 10, 12, 3, 13) == 13);
  CHECK(bound_value(BoundKind::PrimeField, 3, 3, 1, 7) == 3);
  CHECK(bound_value(BoundKind::ThreeS, 2, 2, 2, 5) == -2);
  CHECK(bound_value(BoundKind::CauchyDavenport, 3, 4, 0, 5) == 5);
  CHECK(bound_value(BoundKind::ErdosHeilbronn, 3, 3, 1, 7) == 3);
  CHECK(bound_value(BoundKind::AlonNathansonRuzsa, 2, 3, 1, 7) == 3);
  CHECK(bound_value(BoundKind::BalisterWheeler, 2, 3, 1, 7) == 2);
  CHECK(bound_value(BoundKind::PrimePower, 5, 5, 2, 3) == 3);
  CHECK(bound_value(BoundKind::PrimePower, 4, 4, 2, 5) == 3);
  CHECK(bound_value(BoundKind::LargeSets, 30, 30, 2, 31) == 31);
  CHECK(bound_value(BoundKind::Twisted, 3, 2, 1, 5) == 2);
}

TEST_CASE("bound names", "[bounds]") {
  for (auto k : kAllBoundKinds) {
    CHECK(parse_bound_kind(bound_name(k)) == k);
    CHECK(std::string(bound_statement(k)).find(">=") != std::string::npos);
  }
  const std::vector<std::string> names{"cd", "kneser", "eh", "anr", "karolyi", "bw",
                                       "pansun", "thm1", "ppow", "thm2", "prop34", "twisted"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(bound_name(kAllBoundKinds[i]) == names[i]);
  const std::vector<std::string> list{"thm1,pansun", "thm1", "eh"};
  CHECK(parse_bound_list(list) ==
        std::vector<BoundKind>{BoundKind::ThreeS, BoundKind::PrimeField, BoundKind::ErdosHeilbronn});
  const std::vector<std::string> bad{"thm1,nosuch"};
  CHECK_THROWS_AS(parse_bound_list(bad), ParseError);
  CHECK_FALSE(parse_bound_kind("THM1"));
}

TEST_CASE("applicability examples", "[bounds]") {
  const auto z31 = make_group({31});
  const auto thm2 = applicability(BoundKind::LargeSets, sized(z31, 25), sized(z31, 25), sized(z31, 2));
  CHECK(thm2.applicable);
  CHECK(thm2.reason.empty());
  const auto small = applicability(BoundKind::LargeSets, sized(z31, 22), sized(z31, 25), sized(z31, 2));
  CHECK_FALSE(small.applicable);
  CHECK(small.reason.find("23") != std::string::npos);

  const auto v4 = make_group({2, 2});
  const auto ps = applicability(BoundKind::PrimeField, sized(v4, 2), sized(v4, 2), sized(v4, 1));
  CHECK_FALSE(ps.applicable);
  CHECK(ps.reason == "group not prime cyclic");

  const auto z7 = make_group({7});
  const auto tw = applicability(BoundKind::Twisted, sized(z7, 2), sized(z7, 2), sized(z7, 1), 6);
  CHECK_FALSE(tw.applicable);
  CHECK(tw.reason == "γ = -1 excluded");
  CHECK(applicability(BoundKind::Twisted, sized(z7, 2), sized(z7, 2), sized(z7, 1), 5).applicable);
  CHECK_FALSE(applicability(BoundKind::Twisted, sized(z7, 2), sized(z7, 2), sized(z7, 1), 7).applicable);
}

TEST_CASE("hypotheses per kind", "[bounds]") {
  const auto z7 = make_group({7}), z9 = make_group({9}), z6 = make_group({6}), z3z3 = make_group({3, 3});
  CHECK_FALSE(hypothesis_failure(BoundKind::CauchyDavenport, z7, 2, 3, 0, false));
  CHECK(hypothesis_failure(BoundKind::CauchyDavenport, z6, 2, 3, 0, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::Kneser, z6, 2, 3, 0, false));
  CHECK(hypothesis_failure(BoundKind::ErdosHeilbronn, z7, 3, 3, 1, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::ErdosHeilbronn, z7, 3, 3, 1, true));
  CHECK(hypothesis_failure(BoundKind::AlonNathansonRuzsa, z7, 3, 3, 1, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::AlonNathansonRuzsa, z7, 3, 4, 1, false));
  CHECK(hypothesis_failure(BoundKind::Karolyi, z6, 3, 3, 1, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::Karolyi, z6, 3, 3, 1, true));
  CHECK_FALSE(hypothesis_failure(BoundKind::BalisterWheeler, z3z3, 3, 3, 1, false));
  CHECK(hypothesis_failure(BoundKind::PrimeField, z7, 3, 3, 7, false));
  CHECK(hypothesis_failure(BoundKind::PrimeField, z7, 3, 3, 0, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::ThreeS, z6, 1, 1, 6, false));
  CHECK(hypothesis_failure(BoundKind::ThreeS, z6, 1, 1, 0, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::PrimePower, z9, 1, 1, 3, false));
  CHECK(hypothesis_failure(BoundKind::PrimePower, z6, 1, 1, 1, false));
  CHECK(hypothesis_failure(BoundKind::PrimePower, z3z3, 1, 1, 1, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::LargeSets, z6, 1, 1, 1, false));
  CHECK(hypothesis_failure(BoundKind::LargeSets, z6, 6, 6, 2, false));
  CHECK_FALSE(hypothesis_failure(BoundKind::LargeSetsPrimePower, z9, 1, 1, 1, false));
  CHECK(hypothesis_failure(BoundKind::LargeSetsPrimePower, z9, 9, 9, 2, false));
  CHECK(hypothesis_failure(BoundKind::Twisted, make_group({2}), 1, 1, 1, false, 1));
  CHECK(hypothesis_failure(BoundKind::Twisted, z7, 1, 1, 1, false));
}

TEST_CASE("check_triple examples", "[bounds]") {
  const auto z7 = make_group({7});
  const auto r = check_triple(BoundKind::PrimeField, set(z7, "{1,2,3}"), set(z7, "{1,2,3}"), set(z7, "{0}"));
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3);
  CHECK(r.applicable);
  CHECK(r.satisfied);
  CHECK(r.tight);

  const auto z5 = make_group({5});
  const auto t = check_triple(BoundKind::ThreeS, set(z5, "{0,1,2,3}"), set(z5, "{0,1,2,3}"), set(z5, "{0}"));
  CHECK(t.rhs == 5);
  CHECK(t.lhs == 5);
  CHECK(t.satisfied);
  CHECK(t.tight);

  for (auto f : {std::vector<int>{5}, {2, 3}, {2, 2}}) {
    const auto g = bridge::to_spec(f);
    const auto full = ElementSet::full(g);
    const auto d = check_triple(BoundKind::ThreeS, full, full, full);
    CHECK(d.lhs == 0);
    CHECK(d.rhs == std::min<std::int64_t>(2 * g.order() - 3 * g.order(), g.least_prime()));
    CHECK(d.satisfied == (d.lhs >= d.rhs));
  }

  const auto tw = check_triple(BoundKind::Twisted, set(z5, "{0,1,2}"), set(z5, "{0,1}"), set(z5, "{0}"), 2);
  CHECK(tw.lhs == 2);
  CHECK(tw.tight);
  CHECK(tw.gamma == 2);
  CHECK_THROWS_AS(bound_lhs(BoundKind::Twisted, set(z5, "{0}"), set(z5, "{0}"), set(z5, "{0}")), DomainError);
}

TEST_CASE("dropping hypotheses", "[bounds]") {
  const auto z6 = make_group({6});
  const auto a = set(z6, "{0,3}");
  const auto kept = check_triple(BoundKind::PrimeField, a, a, set(z6, "{0}"));
  CHECK_FALSE(kept.applicable);
  CHECK(kept.satisfied);
  CHECK_FALSE(kept.tight);
  CHECK_FALSE(kept.hypothesis_dropped);
  CHECK(kept.reason == "group not prime cyclic");

  const auto dropped = check_triple(BoundKind::PrimeField, a, a, set(z6, "{0}"), std::nullopt, true);
  CHECK(dropped.applicable);
  CHECK(dropped.hypothesis_dropped);
  CHECK(dropped.reason == "group not prime cyclic");
  // {0,3} ∔ {0,3} = {3} while min(2+2-1-2, 2) = 1: satisfied even without hypotheses.
  CHECK(dropped.lhs == 1);
  CHECK(dropped.satisfied);
}

TEST_CASE("report invariants over random triples", "[bounds]") {
  SplitMix64 rng(51);
  for (const auto& f : matrix::groups()) {
    const auto g = bridge::to_spec(f);
    for (int round = 0; round < 100; ++round) {
      const auto a = sample_subset(g, 1 + rng.below(g.order()), rng);
      const auto b = sample_subset(g, 1 + rng.below(g.order()), rng);
      const auto s = sample_subset(g, rng.below(std::min<std::uint64_t>(4, g.order() + 1)), rng);
      for (auto k : kAllBoundKinds) {
        std::optional<std::int64_t> gamma;
        if (domain_of(k) == Domain::Twisted) {
          if (!g.is_prime_cyclic()) continue;
          gamma = static_cast<std::int64_t>(1 + rng.below(g.order() - 1));
        }
        const bool drop = rng.below(2);
        const auto r = check_triple(k, a, b, s, gamma, drop);
        if (r.tight) CHECK(r.satisfied);
        CHECK(r.satisfied == (!r.applicable || r.lhs >= r.rhs));
        CHECK(r.rhs <= static_cast<std::int64_t>(g.least_prime()));
        if (domain_of(k) == Domain::Generalized) {
          CHECK(r.lhs == check_triple(k, negate(b), negate(a), s, gamma, drop).lhs);
        }
      }
    }
  }
}
