#pragma once

// Subgroups, subgroup enumeration and concrete quotient groups.

#include <cstdint>
#include <vector>

#include "rsumlab/element_set.hpp"
#include "rsumlab/group.hpp"

namespace rsumlab {

/// Ceiling on the group order for lattice enumeration of non-cyclic groups.
inline constexpr std::uint64_t kDefaultSubgroupCeiling = 64;

class Subgroup {
 public:
  /// Validates closure under addition and negation; throws DomainError otherwise.
  explicit Subgroup(ElementSet members);

  static Subgroup trivial(const GroupSpec& g);
  static Subgroup whole(const GroupSpec& g);
  /// Subgroup generated by the given elements.
  static Subgroup generated_by(const GroupSpec& g, std::span<const Index> generators);

  const GroupSpec& group() const { return members_.group(); }
  const ElementSet& members() const { return members_; }
  std::uint64_t order() const { return members_.size(); }
  std::uint64_t index() const { return group().order() / order(); }
  bool contains(Index i) const { return members_.contains(i); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  struct Trusted {};
  Subgroup(ElementSet members, Trusted) : members_(std::move(members)) {}

  ElementSet members_;

  friend std::vector<Subgroup> all_subgroups(const GroupSpec&, std::uint64_t);
};

bool is_closed_subgroup(const ElementSet& s);

/// Every subgroup of g, sorted by member bitmap. Cyclic groups are handled by
/// divisor enumeration; other groups are limited to `ceiling`.
std::vector<Subgroup> all_subgroups(const GroupSpec& g,
                                    std::uint64_t ceiling = kDefaultSubgroupCeiling);

/// Subgroups H with [G:H] = p(G), sorted by member bitmap.
std::vector<Subgroup> prime_index_subgroups(const GroupSpec& g,
                                            std::uint64_t ceiling = kDefaultSubgroupCeiling);

/// Subgroups of prime order, sorted by member bitmap.
std::vector<Subgroup> prime_order_subgroups(const GroupSpec& g,
                                            std::uint64_t ceiling = kDefaultSubgroupCeiling);

/// G/H realized as a concrete product of cyclic groups. Cosets are numbered
/// by their minimal element index; `project` is a surjective homomorphism with
/// kernel H.
class Quotient {
 public:
  Quotient(const GroupSpec& g, const Subgroup& h,
           std::uint64_t ceiling = kDefaultSubgroupCeiling);

  const GroupSpec& group() const { return group_; }
  const GroupSpec& quotient_group() const { return quotient_; }
  /// Minimal element index of each coset, ascending.
  const std::vector<Index>& representatives() const { return representatives_; }

  /// Position of the coset of x in representatives().
  std::size_t coset_of(Index x) const { return coset_of_[x]; }
  Index representative_of(Index x) const { return representatives_[coset_of_[x]]; }
  /// Image of x in quotient_group().
  Index project(Index x) const { return image_of_coset_[coset_of_[x]]; }
  GroupElement project(const GroupElement& x) const;

 private:
  GroupSpec group_;
  GroupSpec quotient_;
  std::vector<Index> representatives_;
  std::vector<std::size_t> coset_of_;
  std::vector<Index> image_of_coset_;
};

Quotient quotient(const GroupSpec& g, const Subgroup& h,
                  std::uint64_t ceiling = kDefaultSubgroupCeiling);

}  // namespace rsumlab
