#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "rsumlab/error.hpp"
#include "rsumlab/group.hpp"

namespace rsumlab::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c, std::string_view what) {
    skip_ws();
    if (!consume(c)) {
      throw ParseError(std::string(what) + " '" + std::string(text_) + "': expected '" + c +
                       "' at position " + std::to_string(pos_));
    }
  }
  std::uint64_t read_uint(std::string_view what) {
    skip_ws();
    std::uint64_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) {
      throw ParseError(std::string(what) + " '" + std::string(text_) +
                       "': expected a non-negative integer at position " + std::to_string(pos_));
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Index read_element(Cursor& cur, const GroupSpec& g) {
  cur.skip_ws();
  if (g.rank() == 1) {
    const auto v = cur.read_uint("element");
    if (v >= g.order()) {
      throw ParseError("element " + std::to_string(v) + " out of range for " + g.to_string());
    }
    return v;
  }
  cur.expect('(', "element");
  Index out = 0;
  for (std::size_t k = 0; k < g.rank(); ++k) {
    if (k) cur.expect(',', "element");
    const auto v = cur.read_uint("element");
    if (v >= g.factors()[k]) {
      throw ParseError("coordinate " + std::to_string(v) + " out of range for Z" +
                       std::to_string(g.factors()[k]) + " in " + g.to_string());
    }
    out += v * g.strides()[k];
  }
  cur.expect(')', "element");
  return out;
}

}  // namespace rsumlab::detail
