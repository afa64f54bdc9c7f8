#pragma once

// Constructive tools: coset decomposition, stabilizers, distinct-representative
// selection, critical-pair classification and the fiber-spread count.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rsumlab/element_set.hpp"
#include "rsumlab/subgroup.hpp"

namespace rsumlab {

// ---- coset decomposition ---------------------------------------------------

struct CosetPart {
  Index representative;  // minimal element of the coset
  ElementSet fiber;      // {x - representative : x in X ∩ coset}, a subset of H
};

/// X = ∪ (a_i + A_i) over the H-cosets meeting X, largest fibers first.
struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<CosetPart> parts;

  std::size_t part_count() const { return parts.size(); }
  ElementSet rebuild() const;
};

CosetDecomposition coset_decompose(const ElementSet& x, const Subgroup& h);

/// Period {g : g + X = X}.
Subgroup stabilizer(const ElementSet& x);

// ---- distinct representatives -----------------------------------------------

enum class SdrVariant {
  /// Z_p, S-restricted sums, index window {2..h+2, k+h+2}.
  PrimeWindow,
  /// Any abelian G, S-restricted sums, index window {2..3h, k+3h}.
  TripleWindow,
  /// Any abelian G, unrestricted sums, i_k = k for k = 2..m.
  Unrestricted,
};

const char* sdr_variant_name(SdrVariant v);
std::optional<SdrVariant> parse_sdr_variant(std::string_view name);

/// A and B are ordered (a_1, ..., a_m), (b_1, ..., b_n).
struct SdrInstance {
  GroupSpec group;
  std::vector<Index> a;
  std::vector<Index> b;
  ElementSet s;
  SdrVariant variant = SdrVariant::PrimeWindow;
};

struct SdrPair {
  std::size_t k;  // position
  std::size_t i;  // 1-based into A
  std::size_t j;  // 1-based into B
  Index sum;
};

struct SdrSolution {
  SdrVariant variant;
  std::vector<SdrPair> pairs;
};

/// Throws HypothesisViolation when the instance is outside the variant's hypotheses.
void check_sdr_hypotheses(const SdrInstance& inst);
/// Number of representatives the variant must produce.
std::size_t sdr_length(const SdrInstance& inst);
/// Admissible indices i for position k, ascending.
std::vector<std::size_t> sdr_window(const SdrInstance& inst, std::size_t k);

/// Distinct sums, one per position, via maximum matching. Throws
/// HypothesisViolation, or LemmaViolation if no complete matching exists.
SdrSolution sdr_select(const SdrInstance& inst);

/// First broken invariant of a solution, or nullopt.
std::optional<std::string> sdr_defect(const SdrInstance& inst, const SdrSolution& sol);

// ---- critical pairs ---------------------------------------------------------

struct SingletonClass {
  char side;  // 'A' or 'B'
};
struct ArithmeticPairClass {
  Index difference;
  std::size_t k;
  std::size_t l;
};
struct CosetPairClass {
  Subgroup subgroup;
  Index a_offset;
  Index b_offset;
};
using StructureClass = std::variant<SingletonClass, ArithmeticPairClass, CosetPairClass>;

/// Differences q != 0 for which X = {x, x+q, ..., x+(k-1)q}, ascending.
std::vector<Index> progression_differences(const ElementSet& x);

/// Every structural class matched by a pair with |A+B| = |A|+|B|-1 <= p(G)-1.
/// Throws HypothesisViolation if the pair is not critical and
/// EmptyClassification if nothing matches.
std::vector<StructureClass> classify_critical_pair(const ElementSet& a, const ElementSet& b);

bool is_critical_pair(const ElementSet& a, const ElementSet& b);

/// Checks a reported class against its definition.
bool class_holds(const StructureClass& c, const ElementSet& a, const ElementSet& b);

std::string describe(const StructureClass& c, const GroupSpec& g);

// ---- fiber spread -------------------------------------------------------------

struct FiberSpread {
  std::size_t count1;
  std::size_t count2;
  bool ok;
};

/// Throws DomainError unless G = K1 ⊕ K2 with both factors nontrivial.
FiberSpread fiber_spread_check(const ElementSet& a, const Subgroup& k1, const Subgroup& k2);

/// fiber_spread_check with the direct-sum validation and coset tables done once.
class FiberSpreadChecker {
 public:
  FiberSpreadChecker(const Subgroup& k1, const Subgroup& k2);

  FiberSpread check(const ElementSet& a) const;
  /// Bitmap form; the group must have order <= 64.
  FiberSpread check_mask(std::uint64_t a) const;

 private:
  GroupSpec group_;
  std::vector<Index> rep1_;  // minimal element of the K1-coset of each element
  std::vector<Index> rep2_;
};

/// Number of K-cosets meeting A.
std::size_t cosets_meeting(const ElementSet& a, const Subgroup& k);

}  // namespace rsumlab
