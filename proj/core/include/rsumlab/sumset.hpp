#pragma once

// Sumset operators over ElementSet, evaluated by pair enumeration.
//
//   A + B        = {a + b : a in A, b in B}
//   A ∔ B        = {a + b : a != b}
//   A +_S B      = {a + b : a - b not in S}      (S = ∅ gives A + B)
//   twisted      = {a + b : a - γ b not in S}    (Z_p only)

#include <cstdint>
#include <optional>

#include "rsumlab/element_set.hpp"

namespace rsumlab {

ElementSet sumset(const ElementSet& a, const ElementSet& b);
ElementSet restricted_sumset(const ElementSet& a, const ElementSet& b);
ElementSet generalized_restricted_sumset(const ElementSet& a, const ElementSet& b,
                                         const ElementSet& s);
/// Requires a prime cyclic group and gamma not divisible by p. gamma = p - 1
/// is allowed here; only the bound checker rejects it.
ElementSet twisted_restricted_sumset(const ElementSet& a, const ElementSet& b, const ElementSet& s,
                                     std::int64_t gamma);

struct SumsetQuery {
  ElementSet a;
  ElementSet b;
  ElementSet s;
  std::optional<std::int64_t> twist{};
};

/// Generalized restricted sumset, or the twisted variant when `twist` is set.
ElementSet evaluate(const SumsetQuery& q);

}  // namespace rsumlab
