#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>
#include <rsumlab/report.hpp>

using namespace rsumlab;
using nlohmann::json;

namespace {

VerifyOptions z7_options() {
  VerifyOptions o{EnumerationPlan{make_group({7})}};
  o.plan.s_size = {1, 2};
  o.kinds = {BoundKind::PrimeField, BoundKind::ThreeS, BoundKind::Twisted};
  o.max_witnesses = 4;
  return o;
}

}  // namespace

TEST_CASE("JSON summary schema", "[report]") {
  const auto opt = z7_options();
  const auto s = exhaustive_verify(opt);
  const auto j = json::parse(render_summary(s, opt, OutputFormat::Json));
  CHECK(j.at("group") == "Z7");
  CHECK(j.at("kinds") == json::array({"pansun", "thm1", "twisted"}));
  CHECK(j.at("triples_checked") == s.triples_checked);
  CHECK(j.at("violation_count") == 0);
  CHECK(j.at("violations").empty());
  CHECK_FALSE(j.contains("elapsed_ms"));
  const auto& c = j.at("constraints");
  CHECK(c.at("mode") == "exhaustive");
  CHECK(c.at("s_size") == json::array({1, 2}));
  CHECK(c.at("a_size") == json::array({1, 7}));
  CHECK(c.at("canonicalize") == true);
  CHECK(c.at("gamma").is_null());
  CHECK_FALSE(c.contains("shard"));
  REQUIRE(j.at("per_kind").size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(j["per_kind"][i].at("checked") == s.tallies[i].checked);
    CHECK(j["per_kind"][i].at("applicable") == s.tallies[i].applicable);
  }
  REQUIRE(j.at("tight").size() == s.tight.size());
  const auto& g = s.group;
  for (std::size_t i = 0; i < s.tight.size(); ++i) {
    const auto& w = j["tight"][i];
    const auto& r = s.tight[i];
    CHECK(parse_set(g, w.at("A").get<std::string>()) == r.a);
    CHECK(parse_set(g, w.at("B").get<std::string>()) == r.b);
    CHECK(parse_set(g, w.at("S").get<std::string>()) == r.s);
    CHECK(w.at("lhs") == r.lhs);
    CHECK(w.at("rhs") == r.rhs);
    CHECK(w.at("tight") == true);
    CHECK(parse_bound_kind(w.at("kind").get<std::string>()) == r.kind);
    if (r.gamma) CHECK(w.at("gamma") == *r.gamma);
    else CHECK(w.at("gamma").is_null());
  }
  const auto timed = json::parse(render_summary(s, opt, OutputFormat::Json, true));
  CHECK(timed.contains("elapsed_ms"));
}

TEST_CASE("rendering is a pure function of the summary", "[report]") {
  const auto opt = z7_options();
  const auto a = exhaustive_verify(opt);
  const auto b = exhaustive_verify(opt);
  for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv}) {
    CHECK(render_summary(a, opt, f) == render_summary(b, opt, f));
  }
}

TEST_CASE("CSV output", "[report]") {
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("{1,2}") == "\"{1,2}\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  const auto opt = z7_options();
  const auto s = exhaustive_verify(opt);
  const auto csv = render_summary(s, opt, OutputFormat::Csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "group,kind,A,B,S,gamma,lhs,rhs,tight");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("Z7,", 0) == 0);
    CHECK(line.substr(line.size() - 4) == "true");
  }
  CHECK(rows == s.tight.size() + s.violations.size());
}

TEST_CASE("text and witness renderings", "[report]") {
  const auto opt = z7_options();
  const auto s = exhaustive_verify(opt);
  const auto text = render_summary(s, opt, OutputFormat::Text);
  CHECK(text.find("group Z7") != std::string::npos);
  CHECK(text.find("violations: none") != std::string::npos);

  const auto g = make_group({7});
  const auto rows = search_witnesses(opt, BoundKind::PrimeField, SearchMode::Tight);
  const auto j = json::parse(render_witnesses(g, BoundKind::PrimeField, SearchMode::Tight, rows, OutputFormat::Json));
  CHECK(j.is_object());
  CHECK(render_witnesses(g, BoundKind::PrimeField, SearchMode::Tight, rows, OutputFormat::Csv)
            .rfind("group,kind,A,B,S,gamma,lhs,rhs,tight\n", 0) == 0);
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK_FALSE(parse_output_format("xml"));
}
