#include "rsumlab/group.hpp"

#include <charconv>
#include <numeric>

#include "rsumlab/error.hpp"
#include "text_util.hpp"

namespace rsumlab {

std::uint64_t least_prime_factor(std::uint64_t n) {
  if (n < 2) return 0;
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

bool is_prime(std::uint64_t n) { return n >= 2 && least_prime_factor(n) == n; }

GroupSpec::GroupSpec(std::vector<std::uint64_t> factors, std::uint64_t max_order) {
  if (factors.empty()) throw DomainError("group needs at least one cyclic factor");
  auto impl = std::make_shared<Impl>();
  std::uint64_t order = 1;
  for (auto n : factors) {
    if (n < 2) throw DomainError("cyclic factor " + std::to_string(n) + " is < 2");
    if (order > max_order / n) {
      throw DomainError("group order exceeds the configured maximum " + std::to_string(max_order));
    }
    order *= n;
  }
  impl->strides.assign(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i > 0; --i) {
    impl->strides[i - 1] = impl->strides[i] * factors[i];
  }
  impl->order = order;
  impl->least_prime = least_prime_factor(order);
  impl->factors = std::move(factors);
  impl_ = std::move(impl);
}

bool GroupSpec::is_prime_cyclic() const { return rank() == 1 && is_prime(order()); }

bool GroupSpec::is_prime_power_cyclic() const {
  if (rank() != 1) return false;
  std::uint64_t n = order();
  const std::uint64_t p = least_prime();
  while (n % p == 0) n /= p;
  return n == 1;
}

Index GroupSpec::add(Index a, Index b) const {
  const auto& f = impl_->factors;
  if (f.size() == 1) {
    const Index s = a + b;
    return s >= f[0] ? s - f[0] : s;
  }
  Index out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto st = impl_->strides[i];
    Index d = (a / st) % f[i] + (b / st) % f[i];
    if (d >= f[i]) d -= f[i];
    out += d * st;
  }
  return out;
}

Index GroupSpec::neg(Index a) const {
  const auto& f = impl_->factors;
  Index out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto st = impl_->strides[i];
    const Index d = (a / st) % f[i];
    out += (d == 0 ? 0 : f[i] - d) * st;
  }
  return out;
}

Index GroupSpec::sub(Index a, Index b) const { return add(a, neg(b)); }

Index GroupSpec::scale(std::int64_t u, Index a) const {
  const auto& f = impl_->factors;
  Index out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto st = impl_->strides[i];
    const auto n = static_cast<std::int64_t>(f[i]);
    std::int64_t k = u % n;
    if (k < 0) k += n;
    const auto d = static_cast<unsigned __int128>((a / st) % f[i]) * static_cast<std::uint64_t>(k);
    out += static_cast<Index>(d % f[i]) * st;
  }
  return out;
}

std::uint64_t GroupSpec::element_order(Index a) const {
  std::uint64_t result = 1;
  const auto& f = impl_->factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto d = (a / impl_->strides[i]) % f[i];
    const auto ord = f[i] / std::gcd(f[i], d);
    result = std::lcm(result, ord);
  }
  return result;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += 'x';
    out += 'Z';
    out += std::to_string(factors()[i]);
  }
  return out;
}

GroupSpec make_group(std::span<const std::uint64_t> factors, std::uint64_t max_order) {
  return GroupSpec(std::vector<std::uint64_t>(factors.begin(), factors.end()), max_order);
}

GroupSpec parse_group(std::string_view text, std::uint64_t max_order) {
  detail::Cursor cur(text);
  std::vector<std::uint64_t> factors;
  cur.skip_ws();
  do {
    cur.skip_ws();
    if (!cur.consume('Z') && !cur.consume('z')) {
      throw ParseError("group spec '" + std::string(text) + "': expected 'Z<n>'");
    }
    factors.push_back(cur.read_uint("group spec"));
    cur.skip_ws();
  } while (cur.consume('x') || cur.consume('X'));
  if (!cur.at_end()) {
    throw ParseError("group spec '" + std::string(text) + "': trailing characters");
  }
  for (auto n : factors) {
    if (n < 2) throw ParseError("group spec '" + std::string(text) + "': factor < 2");
  }
  try {
    return GroupSpec(std::move(factors), max_order);
  } catch (const DomainError& e) {
    throw ParseError("group spec '" + std::string(text) + "': " + e.what());
  }
}

Index element_index(const GroupSpec& g, const GroupElement& e) {
  if (e.coords.size() != g.rank()) {
    throw DomainError("element has " + std::to_string(e.coords.size()) +
                      " coordinates, group " + g.to_string() + " has rank " +
                      std::to_string(g.rank()));
  }
  Index out = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (e.coords[i] >= g.factors()[i]) {
      throw DomainError("coordinate " + std::to_string(e.coords[i]) + " out of range for Z" +
                        std::to_string(g.factors()[i]));
    }
    out += e.coords[i] * g.strides()[i];
  }
  return out;
}

GroupElement index_element(const GroupSpec& g, Index i) {
  if (i >= g.order()) {
    throw DomainError("index " + std::to_string(i) + " out of range for " + g.to_string());
  }
  GroupElement e;
  e.coords.resize(g.rank());
  for (std::size_t k = 0; k < g.rank(); ++k) {
    e.coords[k] = (i / g.strides()[k]) % g.factors()[k];
  }
  return e;
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  return index_element(g, g.add(element_index(g, a), element_index(g, b)));
}

GroupElement neg(const GroupSpec& g, const GroupElement& a) {
  return index_element(g, g.neg(element_index(g, a)));
}

GroupElement scale(const GroupSpec& g, std::int64_t u, const GroupElement& a) {
  return index_element(g, g.scale(u, element_index(g, a)));
}

Index parse_element(const GroupSpec& g, std::string_view text) {
  detail::Cursor cur(text);
  const Index i = detail::read_element(cur, g);
  cur.skip_ws();
  if (!cur.at_end()) throw ParseError("element '" + std::string(text) + "': trailing characters");
  return i;
}

std::string format_element(const GroupSpec& g, Index i) {
  if (g.rank() == 1) return std::to_string(i);
  std::string out = "(";
  for (std::size_t k = 0; k < g.rank(); ++k) {
    if (k) out += ',';
    out += std::to_string((i / g.strides()[k]) % g.factors()[k]);
  }
  out += ')';
  return out;
}

}  // namespace rsumlab
