#include <catch_amalgamated.hpp>

#include <map>

#include <rsumlab/enumerate.hpp>
#include <rsumlab/mask_kernel.hpp>
#include <rsumlab/sumset.hpp>

#include "bridge.hpp"
#include "matrix.hpp"

using namespace rsumlab;

TEST_CASE("mask operators agree with set operators", "[kernel]") {
  SplitMix64 rng(21);
  auto groups = matrix::groups();
  groups.push_back({64});
  groups.push_back({2, 2, 2, 2, 2, 2});
  groups.push_back({3, 3, 5});
  for (const auto& f : groups) {
    const auto g = bridge::to_spec(f);
    const MaskGroup mg(g);
    CHECK(mg.order() == g.order());
    for (int round = 0; round < 200; ++round) {
      const auto a = sample_subset(g, 1 + rng.below(g.order()), rng);
      const auto b = sample_subset(g, 1 + rng.below(g.order()), rng);
      const auto s = sample_subset(g, rng.below(std::min<std::uint64_t>(4, g.order() + 1)), rng);
      const Index t = rng.below(g.order());
      CHECK(mg.translate(a.mask(), t) == translate(a, t).mask());
      CHECK(mg.negate(a.mask()) == negate(a).mask());
      CHECK(mg.scale(a.mask(), 5) == scale_set(a, 5).mask());
      CHECK(mask_sumset(mg, a.mask(), b.mask()) == sumset(a, b).mask());
      CHECK(mask_restricted_sumset(mg, a.mask(), b.mask()) == restricted_sumset(a, b).mask());
      CHECK(mask_generalized_sumset(mg, a.mask(), b.mask(), s.mask()) ==
            generalized_restricted_sumset(a, b, s).mask());
      if (g.is_prime_cyclic()) {
        const auto gamma = static_cast<std::int64_t>(1 + rng.below(g.order() - 1));
        CHECK(mask_twisted_sumset(mg, a.mask(), b.mask(), s.mask(), gamma) ==
              twisted_restricted_sumset(a, b, s, gamma).mask());
        CHECK(build_rows(mg, a.mask(), s.mask(), 1 + gamma).evaluate(b.mask()) ==
              twisted_restricted_sumset(a, b, s, gamma).mask());
      }
      CHECK(build_rows(mg, a.mask(), s.mask()).evaluate(b.mask()) == generalized_restricted_sumset(a, b, s).mask());
      CHECK(build_rows(mg, a.mask(), 0).evaluate(b.mask()) == sumset(a, b).mask());
    }
  }
}

TEST_CASE("subset sweep matches direct evaluation", "[kernel]") {
  SplitMix64 rng(22);
  struct Case {
    std::vector<int> group;
    SizeRange sizes;
  };
  const std::vector<Case> cases{
      {{5}, {1, SizeRange::kUpToOrder}}, {{2, 6}, {1, SizeRange::kUpToOrder}}, {{13}, {2, 9}},
      {{16}, {1, SizeRange::kUpToOrder}}, {{4, 4}, {3, 5}},  {{20}, {1, 2}},
      {{26}, {1, 3}},                     {{40}, {2, 2}},   {{3, 3, 3}, {25, 27}},
  };
  bool saw_dense = false, saw_sparse = false;
  for (const auto& c : cases) {
    const auto g = bridge::to_spec(c.group);
    INFO(g.to_string());
    const MaskGroup mg(g);
    SubsetSweep sweep(mg.order(), c.sizes);
    (sweep.dense() ? saw_dense : saw_sparse) = true;
    for (std::size_t k = 0; k <= mg.order(); ++k) {
      CHECK(sweep.count_of_size(k) == (c.sizes.contains(k, mg.order()) ? binomial(mg.order(), k) : 0));
    }
    for (int round = 0; round < 6; ++round) {
      const Mask a = sample_subset(g, 1 + rng.below(mg.order()), rng).mask();
      const Mask s = sample_subset(g, rng.below(std::min<std::uint64_t>(3, g.order() + 1)), rng).mask();
      const auto rows = build_rows(mg, a, s, round % 2 ? 2 : 3);

      std::array<std::uint8_t, 65> best;
      best.fill(255);
      std::map<Mask, unsigned> direct;
      for_each_subset_mask(mg.order(), c.sizes, [&](Mask b) {
        const auto v = static_cast<unsigned>(std::popcount(rows.evaluate(b)));
        direct[b] = v;
        auto& slot = best[std::popcount(b)];
        slot = std::min<std::uint8_t>(slot, static_cast<std::uint8_t>(v));
      });

      std::array<std::uint8_t, 65> got;
      sweep.min_by_size(rows, got);
      CHECK(got == best);

      std::uint64_t visits = 0, wrong = 0;
      sweep.for_each(rows, [&](Mask b, unsigned v) {
        ++visits;
        const auto it = direct.find(b);
        wrong += it == direct.end() || it->second != v;
      });
      CHECK(visits == direct.size());
      CHECK(wrong == 0);
    }
  }
  CHECK(saw_dense);
  CHECK(saw_sparse);
}
