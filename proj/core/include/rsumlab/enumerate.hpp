#pragma once

// Enumeration of (A, B, S) triples for exhaustive and sampled sweeps.
//
// Canonical form (canonicalize = true): A is replaced by its minimal translate
// (the smallest bitmap among translates containing 0); when S is enumerated,
// nonempty and B is not tied to A, S is replaced by its minimal translate and
// B is shifted along. This is
// sound because |(g+A) +_{(g-h)+S} (h+B)| = |A +_S B|. B itself is never
// canonicalized.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "rsumlab/element_set.hpp"
#include "rsumlab/group.hpp"
#include "rsumlab/mask_group.hpp"

namespace rsumlab {

struct SizeRange {
  static constexpr std::size_t kUpToOrder = std::numeric_limits<std::size_t>::max();

  std::size_t min = 1;
  std::size_t max = kUpToOrder;

  std::size_t effective_max(std::uint64_t order) const {
    return max == kUpToOrder || max > order ? static_cast<std::size_t>(order) : max;
  }
  bool contains(std::size_t k, std::uint64_t order) const {
    return k >= min && k <= effective_max(order);
  }
};

struct SampleSpec {
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
};

struct EnumerationPlan {
  GroupSpec group;
  SizeRange a_size{};
  SizeRange b_size{};
  SizeRange s_size{0, 0};
  /// Exhaustive when empty.
  std::optional<SampleSpec> sampled{};
  bool canonicalize = true;
  /// B is the same set as A.
  bool diagonal = false;
  /// Overrides s_size with one fixed set.
  std::optional<ElementSet> fixed_s{};

  /// Throws DomainError on inconsistent bounds.
  void validate() const;
};

struct Triple {
  ElementSet a;
  ElementSet b;
  ElementSet s;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

/// Streams triples in (A, S, B) bitmap order. Exhaustive plans shard on the
/// rank of A; sampled plans shard on the sample number.
void for_each_triple(const EnumerationPlan& plan, Shard shard,
                     const std::function<void(const Triple&)>& visit);
std::vector<Triple> collect_triples(const EnumerationPlan& plan, Shard shard = {});

/// Number of triples an exhaustive plan yields (all shards).
std::uint64_t count_triples(const EnumerationPlan& plan);

/// Image of a triple under the canonicalization map used by enumeration.
Triple canonical_form(const Triple& t, bool diagonal, bool s_fixed);

/// Smallest bitmap among the translates of s that contain 0, and the smallest shift attaining it.
ElementSet min_translate(const ElementSet& s, Index* shift = nullptr);

/// S masks of an exhaustive plan in enumeration order (order <= 64).
std::vector<Mask> plan_s_masks(const EnumerationPlan& plan, const MaskGroup& mg);

/// Calls fn(mask) for every subset of an n-element group (n <= 64) whose size
/// lies in `sizes`, in increasing bitmap order.
void for_each_subset_mask(unsigned n, SizeRange sizes, const std::function<void(Mask)>& fn);

/// Splittable 64-bit generator (SplitMix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform on [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Independent stream for the given key.
  SplitMix64 split(std::uint64_t key) const;

 private:
  std::uint64_t state_;
};

/// Uniform subset of the given size (Floyd's sampling without replacement).
ElementSet sample_subset(const GroupSpec& g, std::size_t size, SplitMix64& rng);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace rsumlab
