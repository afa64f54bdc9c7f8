#pragma once

// Finite abelian groups given as an explicit product of cyclic factors
// Z_{n_1} x ... x Z_{n_k}. Elements are addressed by a mixed-radix index
// with the first factor most significant; all set-level code works on
// these indices.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsumlab {

using Index = std::uint64_t;

inline constexpr std::uint64_t kDefaultMaxGroupOrder = std::uint64_t{1} << 20;

class GroupSpec {
 public:
  /// Builds Z_{factors[0]} x ... ; every factor must be >= 2 and the order
  /// must not exceed `max_order`. Throws DomainError otherwise.
  explicit GroupSpec(std::vector<std::uint64_t> factors,
                     std::uint64_t max_order = kDefaultMaxGroupOrder);

  const std::vector<std::uint64_t>& factors() const { return impl_->factors; }
  /// Mixed-radix place values; the last factor has stride 1.
  const std::vector<std::uint64_t>& strides() const { return impl_->strides; }
  std::size_t rank() const { return impl_->factors.size(); }
  std::uint64_t order() const { return impl_->order; }
  /// Smallest prime dividing the order, p(G).
  std::uint64_t least_prime() const { return impl_->least_prime; }

  bool is_prime_cyclic() const;
  /// Rank one and of order p^k for a prime p.
  bool is_prime_power_cyclic() const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  /// u * a, with u reduced modulo each factor (negative u allowed).
  Index scale(std::int64_t u, Index a) const;
  /// Additive order of the element.
  std::uint64_t element_order(Index a) const;

  /// "Z7", "Z2xZ4".
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.impl_ == b.impl_ || a.impl_->factors == b.impl_->factors;
  }

 private:
  struct Impl {
    std::vector<std::uint64_t> factors;
    std::vector<std::uint64_t> strides;
    std::uint64_t order = 1;
    std::uint64_t least_prime = 0;
  };
  std::shared_ptr<const Impl> impl_;
};

GroupSpec make_group(std::span<const std::uint64_t> factors,
                     std::uint64_t max_order = kDefaultMaxGroupOrder);
inline GroupSpec make_group(std::initializer_list<std::uint64_t> factors,
                            std::uint64_t max_order = kDefaultMaxGroupOrder) {
  return make_group(std::span<const std::uint64_t>(factors.begin(), factors.size()), max_order);
}

/// Parses `Z<n>` or `Z<n1>xZ<n2>x...`.
GroupSpec parse_group(std::string_view text, std::uint64_t max_order = kDefaultMaxGroupOrder);

std::uint64_t least_prime_factor(std::uint64_t n);
bool is_prime(std::uint64_t n);

struct GroupElement {
  std::vector<std::uint64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

Index element_index(const GroupSpec& g, const GroupElement& e);
GroupElement index_element(const GroupSpec& g, Index i);

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& g, const GroupElement& a);
GroupElement scale(const GroupSpec& g, std::int64_t u, const GroupElement& a);

/// Element literal: `<i>` for rank-1 groups, `(<i>,<j>,...)` otherwise.
Index parse_element(const GroupSpec& g, std::string_view text);
std::string format_element(const GroupSpec& g, Index i);

}  // namespace rsumlab
