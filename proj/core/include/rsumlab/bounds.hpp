#pragma once

// Catalog of lower bounds for |A + B|, |A ∔ B| and |A +_S B|, and checking of
// single triples against them. Every right-hand side has the form
// min(linear expression in |A|, |B|, |S|, p(G)).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsumlab/element_set.hpp"

namespace rsumlab {

enum class BoundKind {
  CauchyDavenport,      // |A+B| >= min(|A|+|B|-1, p), G = Z_p
  Kneser,               // |A+B| >= min(|A|+|B|-1, p(G))
  ErdosHeilbronn,       // |A∔A| >= min(2|A|-3, p), G = Z_p
  AlonNathansonRuzsa,   // |A∔B| >= min(|A|+|B|-2, p), G = Z_p, |A| != |B|
  Karolyi,              // |A∔A| >= min(2|A|-3, p(G))
  BalisterWheeler,      // |A∔B| >= min(|A|+|B|-3, p(G))
  PrimeField,           // |A+_S B| >= min(|A|+|B|-|S|-2, p), G = Z_p, |S| < p
  ThreeS,               // |A+_S B| >= min(|A|+|B|-3|S|, p(G))
  PrimePower,           // |A+_S B| >= min(|A|+|B|-2|S|-1, p), G = Z_{p^a}
  LargeSets,            // |A+_S B| >= min(|A|+|B|-|S|-2, p(G)), min(|A|,|B|) >= 9|S|^2-5|S|-3
  LargeSetsPrimePower,  // same, G = Z_{p^a}, min(|A|,|B|) >= 6|S|^2-5
  Twisted,              // |{a+b : a-γb ∉ S}| >= min(|A|+|B|-|S|-2, p), G = Z_p, γ ∉ {0,-1}
};

inline constexpr std::array kAllBoundKinds{
    BoundKind::CauchyDavenport, BoundKind::Kneser,     BoundKind::ErdosHeilbronn,
    BoundKind::AlonNathansonRuzsa, BoundKind::Karolyi, BoundKind::BalisterWheeler,
    BoundKind::PrimeField,      BoundKind::ThreeS,     BoundKind::PrimePower,
    BoundKind::LargeSets,       BoundKind::LargeSetsPrimePower, BoundKind::Twisted,
};

/// Which sumset a kind bounds, and over which triples sweeps evaluate it.
enum class Domain {
  Plain,        // A + B; S = ∅
  Restricted,   // A ∔ B; S = {0}
  Diagonal,     // A ∔ A; B = A, S = {0}
  Generalized,  // A +_S B
  Twisted,      // a - γb ∉ S
};

Domain domain_of(BoundKind k);
const char* domain_name(Domain d);

/// Lowercase CLI token (cd, kneser, eh, anr, karolyi, bw, pansun, thm1, ppow,
/// thm2, prop34, twisted).
const char* bound_name(BoundKind k);
std::optional<BoundKind> parse_bound_kind(std::string_view name);
/// Human-readable statement of the inequality.
const char* bound_statement(BoundKind k);

/// The min-expression; may be zero or negative.
std::int64_t bound_value(BoundKind k, std::int64_t a, std::int64_t b, std::int64_t s, std::int64_t p);

/// nullopt when every hypothesis of the bound holds, otherwise the first failed one.
std::optional<std::string> hypothesis_failure(BoundKind k, const GroupSpec& g, std::size_t a,
                                              std::size_t b, std::size_t s, bool same_sets,
                                              std::optional<std::int64_t> gamma = std::nullopt);

struct Applicability {
  bool applicable;
  std::string reason;  // empty when applicable
};

Applicability applicability(BoundKind k, const ElementSet& a, const ElementSet& b, const ElementSet& s,
                            std::optional<std::int64_t> gamma = std::nullopt);

struct BoundReport {
  BoundKind kind;
  ElementSet a;
  ElementSet b;
  ElementSet s;
  std::optional<std::int64_t> gamma;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool applicable = false;
  bool satisfied = true;
  bool tight = false;
  bool hypothesis_dropped = false;
  std::string reason{};
};

/// Size of the sumset the kind speaks about: A + B, A ∔ B, A +_S B or the
/// twisted set (γ required for Twisted).
std::int64_t bound_lhs(BoundKind k, const ElementSet& a, const ElementSet& b, const ElementSet& s,
                       std::optional<std::int64_t> gamma = std::nullopt);

/// With drop_hypotheses the formula is evaluated as if applicable; the report
/// is flagged and `reason` keeps the hypothesis that was ignored.
BoundReport check_triple(BoundKind k, const ElementSet& a, const ElementSet& b, const ElementSet& s,
                         std::optional<std::int64_t> gamma = std::nullopt, bool drop_hypotheses = false);

/// Parses "thm1,pansun" style lists; throws ParseError on unknown names.
std::vector<BoundKind> parse_bound_list(std::span<const std::string> names);

}  // namespace rsumlab
