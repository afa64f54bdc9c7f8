#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsumlab/group.hpp"

namespace rsumlab {

/// Subset of a finite abelian group stored as a dense membership bitmap over
/// element indices. Bit i of the bitmap is element index i.
class ElementSet {
 public:
  explicit ElementSet(GroupSpec group);

  static ElementSet from_indices(GroupSpec group, std::span<const Index> indices);
  static ElementSet from_indices(GroupSpec group, std::initializer_list<Index> indices) {
    return from_indices(std::move(group), std::span<const Index>(indices.begin(), indices.size()));
  }
  /// Groups of order <= 64 only.
  static ElementSet from_mask(GroupSpec group, std::uint64_t mask);
  static ElementSet full(GroupSpec group);

  const GroupSpec& group() const { return group_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Index i) const {
    return i < group_.order() && ((words_[i >> 6] >> (i & 63)) & 1u);
  }

  void insert(Index i);
  void erase(Index i);

  /// Smallest member index; the set must be nonempty.
  Index min() const;
  std::vector<Index> elements() const;
  std::span<const std::uint64_t> words() const { return words_; }
  /// Bitmap as a single word; requires order <= 64.
  std::uint64_t mask() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto b = static_cast<Index>(std::countr_zero(bits));
        fn(static_cast<Index>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  /// Recounts the bitmap; used by tests to check the cached size.
  std::size_t recount() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }
  /// Orders sets of one group by their bitmap read as an unsigned integer.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  GroupSpec group_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;

  friend ElementSet set_union(const ElementSet&, const ElementSet&);
  friend ElementSet set_intersection(const ElementSet&, const ElementSet&);
  friend ElementSet set_difference(const ElementSet&, const ElementSet&);
  friend ElementSet complement(const ElementSet&);
};

ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet complement(const ElementSet& a);
bool is_subset(const ElementSet& a, const ElementSet& b);

/// {x + g : x in s}
ElementSet translate(const ElementSet& s, Index g);
/// {-x : x in s}
ElementSet negate(const ElementSet& s);
/// {u x : x in s}
ElementSet scale_set(const ElementSet& s, std::int64_t u);
ElementSet image_under(const ElementSet& s, const std::function<Index(Index)>& map);

/// Parses `{e1,e2,...}` using the element grammar of the group; duplicates are an error.
ElementSet parse_set(const GroupSpec& g, std::string_view text);
/// Same grammar, but keeps the order in which the elements are written.
std::vector<Index> parse_element_list(const GroupSpec& g, std::string_view text);
/// Elements in ascending index order.
std::string format_set(const ElementSet& s);

void require_same_group(const ElementSet& a, const ElementSet& b);

}  // namespace rsumlab
