#pragma once

// Exhaustive and sampled verification sweeps over (A, B, S) triples.
//
// Each requested kind is evaluated over the triples of its Domain: plain
// kinds over (A, B) with S = ∅, restricted kinds with S = {0}, diagonal kinds
// over A ∔ A, generalized and twisted kinds over the S range of the plan. The
// twisted domain also loops over γ.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsumlab/bounds.hpp"
#include "rsumlab/enumerate.hpp"

namespace rsumlab {

inline constexpr std::uint64_t kDefaultWorkCeiling = 1'000'000'000;

enum class SearchMode { Tight, Counterexample };

struct VerifyOptions {
  /// Group, size ranges, sampling and canonicalization. s_size applies to the
  /// generalized and twisted domains; the other fields are set per domain.
  EnumerationPlan plan;
  std::vector<BoundKind> kinds{};
  /// Twisted domain: a single γ instead of the default range [1, p-2].
  std::optional<std::int64_t> gamma{};
  /// Evaluate every formula as if its hypotheses held.
  bool drop_hypotheses = false;
  /// Witnesses kept per kind and list (smallest encodings first).
  std::size_t max_witnesses = 20;
  /// Ceiling on (triple, kind) checks for the whole plan.
  std::uint64_t work_ceiling = kDefaultWorkCeiling;
  unsigned threads = 1;
  /// Restricts the run to one shard of the canonical-A (or sample) sequence.
  Shard shard{};
  /// The run is split into this many shards internally and merged.
  std::uint64_t shards = 1;
};

struct KindTally {
  BoundKind kind;
  std::uint64_t checked = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
};

struct VerificationSummary {
  GroupSpec group;
  std::vector<BoundKind> kinds;
  /// Sum over domains of the triples visited; twisted triples count once per γ.
  std::uint64_t triples_checked = 0;
  std::vector<KindTally> tallies{};
  /// Sorted by (kind, A, S, γ, B) and capped per kind.
  std::vector<BoundReport> violations{};
  std::vector<BoundReport> tight{};
  double elapsed_ms = 0;

  std::uint64_t violation_count() const;
};

/// (triple, kind) checks the plan requires across all shards.
std::uint64_t estimate_work(const VerifyOptions& opt);

/// Throws WorkCeilingExceeded before running when estimate_work exceeds the ceiling.
VerificationSummary exhaustive_verify(const VerifyOptions& opt);

/// Tight: reports with lhs = rhs. Counterexample: violations with the
/// hypotheses of `kind` dropped.
std::vector<BoundReport> search_witnesses(VerifyOptions opt, BoundKind kind, SearchMode mode);

/// Ordering used for witness lists.
bool witness_less(const BoundReport& x, const BoundReport& y);

}  // namespace rsumlab
