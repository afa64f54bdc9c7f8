#include "rsumlab/element_set.hpp"

#include <algorithm>

#include "rsumlab/error.hpp"
#include "text_util.hpp"

namespace rsumlab {

namespace {

std::size_t word_count(const GroupSpec& g) { return static_cast<std::size_t>((g.order() + 63) / 64); }

std::uint64_t tail_mask(const GroupSpec& g) {
  const auto r = g.order() % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

std::size_t popcount_words(const std::vector<std::uint64_t>& w) {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

}  // namespace

ElementSet::ElementSet(GroupSpec group) : group_(std::move(group)), words_(word_count(group_), 0) {}

ElementSet ElementSet::from_indices(GroupSpec group, std::span<const Index> indices) {
  ElementSet s(std::move(group));
  for (auto i : indices) s.insert(i);
  return s;
}

ElementSet ElementSet::from_mask(GroupSpec group, std::uint64_t mask) {
  if (group.order() > 64) throw DomainError("from_mask requires a group of order <= 64");
  ElementSet s(std::move(group));
  if (mask & ~tail_mask(s.group_)) throw DomainError("mask has bits beyond the group order");
  s.words_[0] = mask;
  s.size_ = static_cast<std::size_t>(std::popcount(s.words_[0]));
  return s;
}

ElementSet ElementSet::full(GroupSpec group) {
  ElementSet s(std::move(group));
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.words_.back() &= tail_mask(s.group_);
  s.size_ = static_cast<std::size_t>(s.group_.order());
  return s;
}

void ElementSet::insert(Index i) {
  if (i >= group_.order()) {
    throw DomainError("index " + std::to_string(i) + " out of range for " + group_.to_string());
  }
  auto& w = words_[i >> 6];
  const auto bit = std::uint64_t{1} << (i & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void ElementSet::erase(Index i) {
  if (i >= group_.order()) return;
  auto& w = words_[i >> 6];
  const auto bit = std::uint64_t{1} << (i & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

Index ElementSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<Index>(w * 64 + std::countr_zero(words_[w]));
  }
  throw DomainError("min() of an empty set");
}

std::vector<Index> ElementSet::elements() const {
  std::vector<Index> out;
  out.reserve(size_);
  for_each([&](Index i) { out.push_back(i); });
  return out;
}

std::uint64_t ElementSet::mask() const {
  if (group_.order() > 64) throw DomainError("mask() requires a group of order <= 64");
  return words_[0];
}

std::size_t ElementSet::recount() const { return popcount_words(words_); }

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  }
  return std::strong_ordering::equal;
}

void require_same_group(const ElementSet& a, const ElementSet& b) {
  if (!(a.group() == b.group())) {
    throw DomainError("sets belong to different groups (" + a.group().to_string() + " vs " +
                      b.group().to_string() + ")");
  }
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  ElementSet out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] |= b.words_[w];
  out.size_ = popcount_words(out.words_);
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  ElementSet out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] &= b.words_[w];
  out.size_ = popcount_words(out.words_);
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  ElementSet out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] &= ~b.words_[w];
  out.size_ = popcount_words(out.words_);
  return out;
}

ElementSet complement(const ElementSet& a) {
  ElementSet out = a;
  for (auto& w : out.words_) w = ~w;
  out.words_.back() &= tail_mask(out.group_);
  out.size_ = static_cast<std::size_t>(out.group_.order()) - a.size_;
  return out;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  require_same_group(a, b);
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (wa[w] & ~wb[w]) return false;
  }
  return true;
}

ElementSet translate(const ElementSet& s, Index g) {
  const auto& grp = s.group();
  if (g >= grp.order()) throw DomainError("translation element out of range");
  ElementSet out(grp);
  s.for_each([&](Index x) { out.insert(grp.add(x, g)); });
  return out;
}

ElementSet negate(const ElementSet& s) {
  const auto& grp = s.group();
  ElementSet out(grp);
  s.for_each([&](Index x) { out.insert(grp.neg(x)); });
  return out;
}

ElementSet scale_set(const ElementSet& s, std::int64_t u) {
  const auto& grp = s.group();
  ElementSet out(grp);
  s.for_each([&](Index x) { out.insert(grp.scale(u, x)); });
  return out;
}

ElementSet image_under(const ElementSet& s, const std::function<Index(Index)>& map) {
  ElementSet out(s.group());
  s.for_each([&](Index x) { out.insert(map(x)); });
  return out;
}

std::vector<Index> parse_element_list(const GroupSpec& g, std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Index> out;
  ElementSet seen(g);
  cur.expect('{', "set literal");
  cur.skip_ws();
  if (!cur.consume('}')) {
    do {
      const Index i = detail::read_element(cur, g);
      if (seen.contains(i)) {
        throw ParseError("set literal '" + std::string(text) + "': duplicate element " +
                         format_element(g, i));
      }
      seen.insert(i);
      out.push_back(i);
      cur.skip_ws();
    } while (cur.consume(','));
    cur.expect('}', "set literal");
  }
  cur.skip_ws();
  if (!cur.at_end()) {
    throw ParseError("set literal '" + std::string(text) + "': trailing characters");
  }
  return out;
}

ElementSet parse_set(const GroupSpec& g, std::string_view text) {
  const auto items = parse_element_list(g, text);
  return ElementSet::from_indices(g, items);
}

std::string format_set(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Index i) {
    if (!first) out += ',';
    first = false;
    out += format_element(s.group(), i);
  });
  out += '}';
  return out;
}

}  // namespace rsumlab
