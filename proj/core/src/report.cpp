#include "rsumlab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace rsumlab {

using Json = nlohmann::ordered_json;

namespace {

Json range_json(const SizeRange& r, std::uint64_t order) {
  return Json::array({r.min, r.effective_max(order)});
}

Json witness_json(const BoundReport& r) {
  Json j;
  j["kind"] = bound_name(r.kind);
  j["A"] = format_set(r.a);
  j["B"] = format_set(r.b);
  j["S"] = format_set(r.s);
  j["gamma"] = r.gamma ? Json(*r.gamma) : Json(nullptr);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["applicable"] = r.applicable;
  j["satisfied"] = r.satisfied;
  j["tight"] = r.tight;
  j["hypothesis_dropped"] = r.hypothesis_dropped;
  if (r.hypothesis_dropped) j["dropped"] = r.reason;
  return j;
}

Json constraints_json(const VerifyOptions& opt) {
  const auto& p = opt.plan;
  const auto n = p.group.order();
  Json c;
  c["a_size"] = range_json(p.a_size, n);
  c["b_size"] = range_json(p.b_size, n);
  if (p.fixed_s) {
    c["S"] = format_set(*p.fixed_s);
  } else {
    c["s_size"] = range_json(p.s_size, n);
  }
  if (p.sampled) {
    c["mode"] = "sampled";
    c["samples"] = p.sampled->count;
    c["seed"] = p.sampled->seed;
  } else {
    c["mode"] = "exhaustive";
  }
  c["canonicalize"] = p.canonicalize;
  c["gamma"] = opt.gamma ? Json(*opt.gamma) : Json(nullptr);
  c["hypotheses_dropped"] = opt.drop_hypotheses;
  c["max_witnesses"] = opt.max_witnesses;
  if (opt.shard.count > 1) c["shard"] = Json::array({opt.shard.index, opt.shard.count});
  return c;
}

std::string gamma_text(const std::optional<std::int64_t>& g) { return g ? std::to_string(*g) : ""; }

void csv_rows(std::ostream& os, const GroupSpec& g, const std::vector<BoundReport>& rows) {
  for (const auto& r : rows) {
    os << csv_field(g.to_string()) << ',' << bound_name(r.kind) << ',' << csv_field(format_set(r.a)) << ','
       << csv_field(format_set(r.b)) << ',' << csv_field(format_set(r.s)) << ',' << gamma_text(r.gamma) << ','
       << r.lhs << ',' << r.rhs << ',' << (r.tight ? "true" : "false") << '\n';
  }
}

constexpr const char* kCsvHeader = "group,kind,A,B,S,gamma,lhs,rhs,tight\n";

void text_row(std::ostream& os, const BoundReport& r) {
  os << "  " << bound_name(r.kind) << "  A=" << format_set(r.a) << " B=" << format_set(r.b)
     << " S=" << format_set(r.s);
  if (r.gamma) os << " gamma=" << *r.gamma;
  os << "  lhs=" << r.lhs << " rhs=" << r.rhs;
  if (r.hypothesis_dropped) os << "  [dropped: " << r.reason << "]";
  os << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string csv_field(std::string_view v) {
  if (v.find_first_of(",\"\n") == std::string_view::npos) return std::string(v);
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_summary(const VerificationSummary& s, const VerifyOptions& opt, OutputFormat fmt,
                           bool timing) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["group"] = s.group.to_string();
      j["kinds"] = Json::array();
      for (auto k : s.kinds) j["kinds"].push_back(bound_name(k));
      j["constraints"] = constraints_json(opt);
      j["triples_checked"] = s.triples_checked;
      j["violation_count"] = s.violation_count();
      j["per_kind"] = Json::array();
      for (const auto& t : s.tallies) {
        j["per_kind"].push_back(Json{{"kind", bound_name(t.kind)},
                                     {"checked", t.checked},
                                     {"applicable", t.applicable},
                                     {"violations", t.violations}});
      }
      j["violations"] = Json::array();
      for (const auto& r : s.violations) j["violations"].push_back(witness_json(r));
      j["tight"] = Json::array();
      for (const auto& r : s.tight) j["tight"].push_back(witness_json(r));
      if (timing) j["elapsed_ms"] = s.elapsed_ms;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader;
      csv_rows(os, s.group, s.violations);
      csv_rows(os, s.group, s.tight);
      break;
    case OutputFormat::Text: {
      os << "group " << s.group.to_string() << ", p(G)=" << s.group.least_prime() << '\n';
      os << "triples checked: " << s.triples_checked << '\n';
      for (const auto& t : s.tallies) {
        os << "  " << bound_name(t.kind) << ": checked " << t.checked << ", applicable " << t.applicable
           << ", violations " << t.violations << '\n';
      }
      if (s.violations.empty()) {
        os << "violations: none\n";
      } else {
        os << "violations (" << s.violation_count() << ", first " << s.violations.size() << " shown):\n";
        for (const auto& r : s.violations) text_row(os, r);
      }
      if (!s.tight.empty()) {
        os << "tight witnesses (" << s.tight.size() << " shown):\n";
        for (const auto& r : s.tight) text_row(os, r);
      }
      if (timing) os << "elapsed: " << s.elapsed_ms << " ms\n";
      break;
    }
  }
  return os.str();
}

std::string render_witnesses(const GroupSpec& g, BoundKind kind, SearchMode mode,
                             const std::vector<BoundReport>& rows, OutputFormat fmt) {
  std::ostringstream os;
  const char* mode_name = mode == SearchMode::Tight ? "tight" : "counterexample";
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["group"] = g.to_string();
      j["kind"] = bound_name(kind);
      j["mode"] = mode_name;
      j["witnesses"] = Json::array();
      for (const auto& r : rows) j["witnesses"].push_back(witness_json(r));
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << kCsvHeader;
      csv_rows(os, g, rows);
      break;
    case OutputFormat::Text:
      os << mode_name << " witnesses for " << bound_name(kind) << " on " << g.to_string() << ": "
         << rows.size() << '\n';
      for (const auto& r : rows) text_row(os, r);
      break;
  }
  return os.str();
}

}  // namespace rsumlab
