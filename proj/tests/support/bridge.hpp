#pragma once

// Conversions between library sets and oracle sets.

#include <rsumlab/element_set.hpp>
#include <rsumlab/group.hpp>

#include "oracle.hpp"

namespace bridge {

inline oracle::Group to_oracle(const rsumlab::GroupSpec& g) {
  oracle::Group o;
  for (auto f : g.factors()) o.n.push_back(static_cast<int>(f));
  return o;
}

inline rsumlab::GroupSpec to_spec(const std::vector<int>& factors) {
  std::vector<std::uint64_t> f(factors.begin(), factors.end());
  return rsumlab::GroupSpec(f);
}

inline oracle::Set to_oracle(const rsumlab::ElementSet& s) {
  oracle::Set out;
  s.for_each([&](rsumlab::Index i) {
    const auto e = rsumlab::index_element(s.group(), i);
    out.insert(oracle::Elem(e.coords.begin(), e.coords.end()));
  });
  return out;
}

inline rsumlab::ElementSet to_set(const rsumlab::GroupSpec& g, const oracle::Set& s) {
  rsumlab::ElementSet out(g);
  for (const auto& e : s) {
    out.insert(rsumlab::element_index(g, rsumlab::GroupElement{{e.begin(), e.end()}}));
  }
  return out;
}

}  // namespace bridge
