#include "rsumlab/bounds.hpp"

#include <algorithm>

#include "rsumlab/error.hpp"
#include "rsumlab/sumset.hpp"

namespace rsumlab {

namespace {

struct KindInfo {
  BoundKind kind;
  const char* name;
  Domain domain;
  const char* statement;
};

constexpr KindInfo kInfo[] = {
    {BoundKind::CauchyDavenport, "cd", Domain::Plain, "|A+B| >= min(|A|+|B|-1, p) on Z_p"},
    {BoundKind::Kneser, "kneser", Domain::Plain, "|A+B| >= min(|A|+|B|-1, p(G))"},
    {BoundKind::ErdosHeilbronn, "eh", Domain::Diagonal, "|A∔A| >= min(2|A|-3, p) on Z_p"},
    {BoundKind::AlonNathansonRuzsa, "anr", Domain::Restricted,
     "|A∔B| >= min(|A|+|B|-2, p) on Z_p when |A| != |B|"},
    {BoundKind::Karolyi, "karolyi", Domain::Diagonal, "|A∔A| >= min(2|A|-3, p(G))"},
    {BoundKind::BalisterWheeler, "bw", Domain::Restricted, "|A∔B| >= min(|A|+|B|-3, p(G))"},
    {BoundKind::PrimeField, "pansun", Domain::Generalized,
     "|A+_S B| >= min(|A|+|B|-|S|-2, p) on Z_p when |S| < p"},
    {BoundKind::ThreeS, "thm1", Domain::Generalized, "|A+_S B| >= min(|A|+|B|-3|S|, p(G))"},
    {BoundKind::PrimePower, "ppow", Domain::Generalized,
     "|A+_S B| >= min(|A|+|B|-2|S|-1, p) on Z_{p^a}"},
    {BoundKind::LargeSets, "thm2", Domain::Generalized,
     "|A+_S B| >= min(|A|+|B|-|S|-2, p(G)) when min(|A|,|B|) >= 9|S|^2-5|S|-3"},
    {BoundKind::LargeSetsPrimePower, "prop34", Domain::Generalized,
     "|A+_S B| >= min(|A|+|B|-|S|-2, p) on Z_{p^a} when min(|A|,|B|) >= 6|S|^2-5"},
    {BoundKind::Twisted, "twisted", Domain::Twisted,
     "|{a+b : a-γb ∉ S}| >= min(|A|+|B|-|S|-2, p) on Z_p, p >= 3, |S| < p, γ ∉ {0,-1}"},
};

const KindInfo& info(BoundKind k) {
  for (const auto& i : kInfo) {
    if (i.kind == k) return i;
  }
  throw DomainError("unknown bound kind");
}

}  // namespace

Domain domain_of(BoundKind k) { return info(k).domain; }

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Plain: return "plain";
    case Domain::Restricted: return "restricted";
    case Domain::Diagonal: return "diagonal";
    case Domain::Generalized: return "generalized";
    case Domain::Twisted: return "twisted";
  }
  return "?";
}

const char* bound_name(BoundKind k) { return info(k).name; }
const char* bound_statement(BoundKind k) { return info(k).statement; }

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (const auto& i : kInfo) {
    if (name == i.name) return i.kind;
  }
  return std::nullopt;
}

std::vector<BoundKind> parse_bound_list(std::span<const std::string> names) {
  std::vector<BoundKind> out;
  for (const auto& entry : names) {
    std::string_view rest = entry;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto tok = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (tok.empty()) continue;
      const auto k = parse_bound_kind(tok);
      if (!k) throw ParseError("unknown bound kind '" + std::string(tok) + "'");
      if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
    }
  }
  return out;
}

std::int64_t bound_value(BoundKind k, std::int64_t a, std::int64_t b, std::int64_t s, std::int64_t p) {
  std::int64_t v = 0;
  switch (k) {
    case BoundKind::CauchyDavenport:
    case BoundKind::Kneser: v = a + b - 1; break;
    case BoundKind::ErdosHeilbronn:
    case BoundKind::Karolyi: v = 2 * a - 3; break;
    case BoundKind::AlonNathansonRuzsa: v = a + b - 2; break;
    case BoundKind::BalisterWheeler: v = a + b - 3; break;
    case BoundKind::ThreeS: v = a + b - 3 * s; break;
    case BoundKind::PrimePower: v = a + b - 2 * s - 1; break;
    case BoundKind::PrimeField:
    case BoundKind::LargeSets:
    case BoundKind::LargeSetsPrimePower:
    case BoundKind::Twisted: v = a + b - s - 2; break;
  }
  return std::min(v, p);
}

std::optional<std::string> hypothesis_failure(BoundKind k, const GroupSpec& g, std::size_t a,
                                              std::size_t b, std::size_t s, bool same_sets,
                                              std::optional<std::int64_t> gamma) {
  const auto p = g.least_prime();
  const auto small = std::min(a, b);
  const auto sz = static_cast<std::int64_t>(s);
  switch (k) {
    case BoundKind::CauchyDavenport:
      if (!g.is_prime_cyclic()) return "group not prime cyclic";
      break;
    case BoundKind::Kneser:
    case BoundKind::BalisterWheeler:
      break;
    case BoundKind::ErdosHeilbronn:
      if (!g.is_prime_cyclic()) return "group not prime cyclic";
      if (!same_sets) return "requires B = A";
      break;
    case BoundKind::Karolyi:
      if (!same_sets) return "requires B = A";
      break;
    case BoundKind::AlonNathansonRuzsa:
      if (!g.is_prime_cyclic()) return "group not prime cyclic";
      if (a == b) return "requires |A| != |B|";
      break;
    case BoundKind::PrimeField:
      if (!g.is_prime_cyclic()) return "group not prime cyclic";
      if (s == 0) return "S empty";
      if (s >= p) return "|S| = " + std::to_string(s) + " not below p = " + std::to_string(p);
      break;
    case BoundKind::ThreeS:
      if (s == 0) return "S empty";
      break;
    case BoundKind::PrimePower:
      if (!g.is_prime_power_cyclic()) return "group not cyclic of prime power order";
      if (s == 0) return "S empty";
      break;
    case BoundKind::LargeSets: {
      if (s == 0) return "S empty";
      const auto floor = 9 * sz * sz - 5 * sz - 3;
      if (static_cast<std::int64_t>(small) < floor) {
        return "min size " + std::to_string(small) + " < 9|S|^2-5|S|-3 = " + std::to_string(floor);
      }
      break;
    }
    case BoundKind::LargeSetsPrimePower: {
      if (!g.is_prime_power_cyclic()) return "group not cyclic of prime power order";
      if (s == 0) return "S empty";
      const auto floor = 6 * sz * sz - 5;
      if (static_cast<std::int64_t>(small) < floor) {
        return "min size " + std::to_string(small) + " < 6|S|^2-5 = " + std::to_string(floor);
      }
      break;
    }
    case BoundKind::Twisted: {
      if (!g.is_prime_cyclic()) return "group not prime cyclic";
      if (p < 3) return "requires p >= 3";
      if (s == 0) return "S empty";
      if (s >= p) return "|S| = " + std::to_string(s) + " not below p = " + std::to_string(p);
      if (!gamma) return "γ missing";
      const auto pi = static_cast<std::int64_t>(p);
      const auto r = ((*gamma % pi) + pi) % pi;
      if (r == 0) return "γ = 0 excluded";
      if (r == pi - 1) return "γ = -1 excluded";
      break;
    }
  }
  return std::nullopt;
}

Applicability applicability(BoundKind k, const ElementSet& a, const ElementSet& b, const ElementSet& s,
                            std::optional<std::int64_t> gamma) {
  require_same_group(a, b);
  require_same_group(a, s);
  auto why = hypothesis_failure(k, a.group(), a.size(), b.size(), s.size(), a == b, gamma);
  return why ? Applicability{false, std::move(*why)} : Applicability{true, {}};
}

std::int64_t bound_lhs(BoundKind k, const ElementSet& a, const ElementSet& b, const ElementSet& s,
                       std::optional<std::int64_t> gamma) {
  switch (domain_of(k)) {
    case Domain::Plain: return static_cast<std::int64_t>(sumset(a, b).size());
    case Domain::Restricted:
    case Domain::Diagonal: return static_cast<std::int64_t>(restricted_sumset(a, b).size());
    case Domain::Generalized: return static_cast<std::int64_t>(generalized_restricted_sumset(a, b, s).size());
    case Domain::Twisted:
      if (!gamma) throw DomainError("twisted bound needs γ");
      return static_cast<std::int64_t>(twisted_restricted_sumset(a, b, s, *gamma).size());
  }
  return 0;
}

BoundReport check_triple(BoundKind k, const ElementSet& a, const ElementSet& b, const ElementSet& s,
                         std::optional<std::int64_t> gamma, bool drop_hypotheses) {
  BoundReport r{k, a, b, s, domain_of(k) == Domain::Twisted ? gamma : std::nullopt};
  const auto app = applicability(k, a, b, s, gamma);
  r.applicable = app.applicable || drop_hypotheses;
  r.hypothesis_dropped = drop_hypotheses && !app.applicable;
  r.reason = app.reason;
  const auto p = static_cast<std::int64_t>(a.group().least_prime());
  r.rhs = bound_value(k, static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()),
                      static_cast<std::int64_t>(s.size()), p);
  r.lhs = bound_lhs(k, a, b, s, gamma);
  r.satisfied = !r.applicable || r.lhs >= r.rhs;
  r.tight = r.applicable && r.lhs == r.rhs;
  return r;
}

}  // namespace rsumlab
