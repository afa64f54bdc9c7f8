#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsumlab/bounds.hpp"
#include "rsumlab/error.hpp"
#include "rsumlab/group.hpp"
#include "rsumlab/report.hpp"
#include "rsumlab/structure.hpp"
#include "rsumlab/subgroup.hpp"
#include "rsumlab/sumset.hpp"
#include "rsumlab/verify.hpp"

namespace rsumlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string group;
  std::string format = "text";
  std::string out_path;
};

struct PlanFlags {
  std::size_t min_a = 1;
  std::size_t max_a = SizeRange::kUpToOrder;
  std::size_t min_b = 1;
  std::size_t max_b = SizeRange::kUpToOrder;
  std::size_t min_s = 1;
  std::size_t max_s = 1;
  std::string s_literal;
  std::int64_t gamma = 0;
  bool no_canonical = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::uint64_t shards = 1;
  std::uint64_t only_shard = 0;
  unsigned threads = 0;
  std::size_t max_witnesses = 20;
  std::uint64_t work_ceiling = kDefaultWorkCeiling;
  bool timing = false;

  CLI::Option* s_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* sample_opt = nullptr;
  CLI::Option* only_shard_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

void add_common(CLI::App* sub, Common& c, bool formats = true) {
  sub->add_option("--group", c.group, "Group as Z<n> or Z<n1>xZ<n2>x...")->required();
  if (formats) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  }
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
}

void add_plan_flags(CLI::App* sub, PlanFlags& f) {
  sub->add_option("--min-a", f.min_a, "Smallest |A|")->capture_default_str();
  sub->add_option("--max-a", f.max_a, "Largest |A| (default: group order)");
  sub->add_option("--min-b", f.min_b, "Smallest |B|")->capture_default_str();
  sub->add_option("--max-b", f.max_b, "Largest |B| (default: group order)");
  sub->add_option("--min-s", f.min_s, "Smallest |S| for S-restricted kinds")->capture_default_str();
  sub->add_option("--max-s", f.max_s, "Largest |S| for S-restricted kinds")->capture_default_str();
  f.s_opt = sub->add_option("--S", f.s_literal, "Fixed S instead of a size range");
  f.gamma_opt = sub->add_option("--gamma", f.gamma, "Single twist γ (default: every γ in [1, p-2])");
  sub->add_flag("--no-canonical", f.no_canonical, "Enumerate all translates instead of canonical forms");
  f.sample_opt = sub->add_option("--sample", f.sample, "Draw this many seeded random triples instead")
                     ->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "Sampling seed")->capture_default_str();
  sub->add_option("--shards", f.shards, "Split the sweep into this many shards and merge")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  f.only_shard_opt = sub->add_option("--only-shard", f.only_shard, "Run only shard i of --shards");
  f.threads_opt = sub->add_option("--threads", f.threads, "Worker threads (default: RSUMLAB_THREADS or all cores)")
                      ->check(CLI::PositiveNumber);
  sub->add_option("--max-witnesses", f.max_witnesses, "Witnesses kept per kind and list")->capture_default_str();
  sub->add_option("--work-ceiling", f.work_ceiling, "Maximum (triple, kind) checks")->capture_default_str();
  sub->add_flag("--timing", f.timing, "Include elapsed time in the output");
}

ElementSet set_arg(const GroupSpec& g, const std::string& text, const char* flag) {
  try {
    return parse_set(g, text);
  } catch (const Error& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Index> list_arg(const GroupSpec& g, const std::string& text, const char* flag) {
  try {
    return parse_element_list(g, text);
  } catch (const Error& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

GroupSpec group_arg(const std::string& text) {
  try {
    return parse_group(text);
  } catch (const Error& e) {
    throw ParseError(std::string("--group: ") + e.what());
  }
}

Subgroup subgroup_arg(const GroupSpec& g, const std::string& text, const char* flag) {
  try {
    return Subgroup(parse_set(g, text));
  } catch (const Error& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

OutputFormat format_arg(const Common& c) { return *parse_output_format(c.format); }

unsigned thread_count(const PlanFlags& f) {
  if (f.threads_opt && *f.threads_opt) return f.threads;
  if (const char* env = std::getenv("RSUMLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ParseError("RSUMLAB_THREADS: expected a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerifyOptions build_options(const GroupSpec& g, const PlanFlags& f, std::vector<BoundKind> kinds) {
  VerifyOptions opt{EnumerationPlan{g}};
  auto& plan = opt.plan;
  plan.a_size = {f.min_a, f.max_a};
  plan.b_size = {f.min_b, f.max_b};
  plan.s_size = {f.min_s, f.max_s};
  if (*f.s_opt) plan.fixed_s = set_arg(g, f.s_literal, "--S");
  if (*f.sample_opt) plan.sampled = SampleSpec{f.sample, f.seed};
  plan.canonicalize = !f.no_canonical;
  plan.validate();
  opt.kinds = std::move(kinds);
  if (*f.gamma_opt) opt.gamma = f.gamma;
  opt.max_witnesses = f.max_witnesses;
  opt.work_ceiling = f.work_ceiling;
  opt.threads = thread_count(f);
  if (*f.only_shard_opt) {
    if (f.only_shard >= f.shards) throw ParseError("--only-shard: must be below --shards");
    opt.shard = Shard{f.only_shard, f.shards};
  } else {
    opt.shards = f.shards;
  }
  return opt;
}

struct Emitter {
  const Common& common;
  std::ostream& out;

  void operator()(const std::string& payload) const {
    if (common.out_path.empty()) {
      out << payload;
      return;
    }
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f) throw ParseError("--out: cannot open '" + common.out_path + "'");
    f << payload;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- subcommands ------------------------------------------------------------------

struct SumsetArgs {
  Common c;
  std::string a, b, s;
  std::int64_t gamma = 0;
  bool restricted = false;
  CLI::Option* s_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
};

int do_sumset(const SumsetArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto a = set_arg(g, x.a, "--A");
  const auto b = set_arg(g, x.b, "--B");
  if (x.restricted && *x.s_opt) throw ParseError("--restricted: cannot be combined with --S");
  ElementSet s = x.restricted ? ElementSet::from_indices(g, {0}) : ElementSet(g);
  if (*x.s_opt) s = set_arg(g, x.s, "--S");
  std::optional<std::int64_t> gamma;
  if (*x.gamma_opt) gamma = x.gamma;
  const ElementSet r = evaluate(SumsetQuery{a, b, s, gamma});
  const char* op = gamma ? "twisted" : (x.restricted ? "restricted" : (s.empty() ? "sumset" : "generalized"));
  std::string payload;
  switch (format_arg(x.c)) {
    case OutputFormat::Text:
      payload = format_set(r) + "\nsize=" + std::to_string(r.size()) + "\n";
      break;
    case OutputFormat::Json: {
      Json j;
      j["group"] = g.to_string();
      j["operator"] = op;
      j["A"] = format_set(a);
      j["B"] = format_set(b);
      j["S"] = format_set(s);
      j["gamma"] = gamma ? Json(*gamma) : Json(nullptr);
      j["result"] = format_set(r);
      j["size"] = r.size();
      payload = dump(j);
      break;
    }
    case OutputFormat::Csv:
      payload = "operator,result,size\n" + std::string(op) + "," + csv_field(format_set(r)) + "," +
                std::to_string(r.size()) + "\n";
      break;
  }
  Emitter{x.c, out}(payload);
  return 0;
}

struct VerifyArgs {
  Common c;
  PlanFlags f;
  std::vector<std::string> bounds;
};

int do_verify(const VerifyArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto kinds = parse_bound_list(x.bounds);
  if (kinds.empty()) throw ParseError("--bound: no bound kinds given");
  const auto opt = build_options(g, x.f, kinds);
  const auto summary = exhaustive_verify(opt);
  Emitter{x.c, out}(render_summary(summary, opt, format_arg(x.c), x.f.timing));
  return summary.violation_count() == 0 ? 0 : 1;
}

struct SearchArgs {
  Common c;
  PlanFlags f;
  std::string bound;
  std::string mode = "tight";
};

int do_search(const SearchArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto kind = parse_bound_kind(x.bound);
  if (!kind) throw ParseError("--bound: unknown bound kind '" + x.bound + "'");
  const auto mode = x.mode == "tight" ? SearchMode::Tight : SearchMode::Counterexample;
  const auto opt = build_options(g, x.f, {*kind});
  const auto rows = search_witnesses(opt, *kind, mode);
  Emitter{x.c, out}(render_witnesses(g, *kind, mode, rows, format_arg(x.c)));
  // A counterexample that needed no dropped hypothesis contradicts the bound itself.
  for (const auto& r : rows) {
    if (!r.satisfied && !r.hypothesis_dropped) return 1;
  }
  return 0;
}

struct DecomposeArgs {
  Common c;
  std::string x, h;
};

int do_decompose(const DecomposeArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto set = set_arg(g, x.x, "--X");
  const auto h = subgroup_arg(g, x.h, "--H");
  const auto d = coset_decompose(set, h);
  std::string payload;
  switch (format_arg(x.c)) {
    case OutputFormat::Text: {
      payload = "m=" + std::to_string(d.part_count()) + "\n";
      for (const auto& p : d.parts) payload += format_element(g, p.representative) + " + " + format_set(p.fiber) + "\n";
      break;
    }
    case OutputFormat::Json: {
      Json j;
      j["group"] = g.to_string();
      j["X"] = format_set(set);
      j["H"] = format_set(h.members());
      j["m"] = d.part_count();
      j["parts"] = Json::array();
      for (const auto& p : d.parts) {
        j["parts"].push_back(Json{{"representative", format_element(g, p.representative)},
                                  {"fiber", format_set(p.fiber)}});
      }
      payload = dump(j);
      break;
    }
    case OutputFormat::Csv:
      payload = "representative,fiber\n";
      for (const auto& p : d.parts) {
        payload += csv_field(format_element(g, p.representative)) + "," + csv_field(format_set(p.fiber)) + "\n";
      }
      break;
  }
  Emitter{x.c, out}(payload);
  return 0;
}

struct StabilizerArgs {
  Common c;
  std::string x;
};

int do_stabilizer(const StabilizerArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto h = stabilizer(set_arg(g, x.x, "--X"));
  std::string payload;
  switch (format_arg(x.c)) {
    case OutputFormat::Text:
      payload = format_set(h.members()) + "\norder=" + std::to_string(h.order()) + "\n";
      break;
    case OutputFormat::Json:
      payload = dump(Json{{"group", g.to_string()}, {"stabilizer", format_set(h.members())}, {"order", h.order()}});
      break;
    case OutputFormat::Csv:
      payload = "stabilizer,order\n" + csv_field(format_set(h.members())) + "," + std::to_string(h.order()) + "\n";
      break;
  }
  Emitter{x.c, out}(payload);
  return 0;
}

struct ClassifyArgs {
  Common c;
  std::string a, b;
};

int do_classify(const ClassifyArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto a = set_arg(g, x.a, "--A");
  const auto b = set_arg(g, x.b, "--B");
  const auto classes = classify_critical_pair(a, b);
  std::string payload;
  switch (format_arg(x.c)) {
    case OutputFormat::Text:
      for (const auto& cl : classes) payload += describe(cl, g) + "\n";
      break;
    case OutputFormat::Json: {
      Json j;
      j["group"] = g.to_string();
      j["A"] = format_set(a);
      j["B"] = format_set(b);
      j["classes"] = Json::array();
      for (const auto& cl : classes) j["classes"].push_back(describe(cl, g));
      payload = dump(j);
      break;
    }
    case OutputFormat::Csv:
      payload = "class\n";
      for (const auto& cl : classes) payload += csv_field(describe(cl, g)) + "\n";
      break;
  }
  Emitter{x.c, out}(payload);
  return 0;
}

struct SdrArgs {
  Common c;
  std::string a, b, s = "{}";
  std::string variant = "prime";
};

int do_sdr(const SdrArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  SdrInstance inst{g, list_arg(g, x.a, "--A"), list_arg(g, x.b, "--B"), set_arg(g, x.s, "--S"),
                   *parse_sdr_variant(x.variant)};
  const auto sol = sdr_select(inst);
  std::string payload;
  switch (format_arg(x.c)) {
    case OutputFormat::Text:
      payload = "length=" + std::to_string(sol.pairs.size()) + "\n";
      for (const auto& p : sol.pairs) {
        payload += "k=" + std::to_string(p.k) + " i=" + std::to_string(p.i) + " j=" + std::to_string(p.j) +
                   " sum=" + format_element(g, p.sum) + "\n";
      }
      break;
    case OutputFormat::Json: {
      Json j;
      j["group"] = g.to_string();
      j["variant"] = x.variant;
      j["pairs"] = Json::array();
      for (const auto& p : sol.pairs) {
        j["pairs"].push_back(Json{{"k", p.k}, {"i", p.i}, {"j", p.j}, {"sum", format_element(g, p.sum)}});
      }
      payload = dump(j);
      break;
    }
    case OutputFormat::Csv:
      payload = "k,i,j,sum\n";
      for (const auto& p : sol.pairs) {
        payload += std::to_string(p.k) + "," + std::to_string(p.i) + "," + std::to_string(p.j) + "," +
                   csv_field(format_element(g, p.sum)) + "\n";
      }
      break;
  }
  Emitter{x.c, out}(payload);
  return 0;
}

struct FiberArgs {
  Common c;
  std::string a, k1, k2;
};

int do_fiber(const FiberArgs& x, std::ostream& out) {
  const auto g = group_arg(x.c.group);
  const auto a = set_arg(g, x.a, "--A");
  const auto r = fiber_spread_check(a, subgroup_arg(g, x.k1, "--K1"), subgroup_arg(g, x.k2, "--K2"));
  std::string payload;
  switch (format_arg(x.c)) {
    case OutputFormat::Text:
      payload = "count1=" + std::to_string(r.count1) + " count2=" + std::to_string(r.count2) +
                " ok=" + (r.ok ? "true" : "false") + "\n";
      break;
    case OutputFormat::Json:
      payload = dump(Json{{"group", g.to_string()}, {"A", format_set(a)}, {"count1", r.count1},
                          {"count2", r.count2}, {"ok", r.ok}});
      break;
    case OutputFormat::Csv:
      payload = "count1,count2,ok\n" + std::to_string(r.count1) + "," + std::to_string(r.count2) + "," +
                (r.ok ? "true" : "false") + "\n";
      break;
  }
  Emitter{x.c, out}(payload);
  return r.ok ? 0 : 1;
}

std::string bound_help() {
  std::string h = "Bound kind(s), repeatable or comma separated:";
  for (auto k : kAllBoundKinds) h += std::string("\n  ") + bound_name(k) + "  " + bound_statement(k);
  return h;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumsets, restricted sumsets and their lower bounds over finite abelian groups", "rsumlab"};
  app.require_subcommand(1);

  SumsetArgs sumset_args;
  auto* sumset_cmd = app.add_subcommand(
      "sumset",
      "Compute the generalized restricted sumset A +_S B = {a+b : a-b not in S}. An empty S gives the plain "
      "sumset A+B, --restricted the restricted sumset A ∔ B (a != b), and --gamma the twisted set "
      "{a+b : a-γb not in S} over Z_p.");
  add_common(sumset_cmd, sumset_args.c);
  sumset_cmd->add_option("--A", sumset_args.a, "Set literal {e1,e2,...}")->required();
  sumset_cmd->add_option("--B", sumset_args.b, "Set literal")->required();
  sumset_args.s_opt = sumset_cmd->add_option("--S", sumset_args.s, "Excluded differences (default: empty)");
  sumset_args.gamma_opt = sumset_cmd->add_option("--gamma", sumset_args.gamma, "Twist γ (prime cyclic groups)");
  sumset_cmd->add_flag("--restricted", sumset_args.restricted, "Use S = {0}, i.e. a != b");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Check the Cauchy-Davenport, Kneser, Erdős-Heilbronn type and generalized restricted sumset lower bounds "
      "min(|A|+|B|-c, p(G)) over every (or a seeded sample of) triple (A, B, S) of the group.");
  add_common(verify_cmd, verify_args.c);
  verify_cmd->add_option("--bound", verify_args.bounds, bound_help())->required()->delimiter(',');
  add_plan_flags(verify_cmd, verify_args.f);

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand(
      "search",
      "Search for tight witnesses (|A +_S B| equal to a bound) or for counterexamples to a bound formula "
      "evaluated with its hypotheses dropped.");
  add_common(search_cmd, search_args.c);
  search_cmd->add_option("--bound", search_args.bound, bound_help())->required();
  search_cmd->add_option("--mode", search_args.mode, "tight or counterexample")
      ->check(CLI::IsMember({"tight", "counterexample"}))
      ->capture_default_str();
  add_plan_flags(search_cmd, search_args.f);

  DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Coset decomposition X = ∪ (a_i + A_i) of a set relative to a subgroup H, largest fibers first.");
  add_common(decompose_cmd, decompose_args.c);
  decompose_cmd->add_option("--X", decompose_args.x, "Set to decompose")->required();
  decompose_cmd->add_option("--H", decompose_args.h, "Subgroup, as a set literal")->required();

  StabilizerArgs stabilizer_args;
  auto* stabilizer_cmd =
      app.add_subcommand("stabilizer", "Kneser stabilizer (period) H(X) = {g : g + X = X} of a set.");
  add_common(stabilizer_cmd, stabilizer_args.c);
  stabilizer_cmd->add_option("--X", stabilizer_args.x, "Nonempty set")->required();

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Classify a critical pair |A+B| = |A|+|B|-1 <= p(G)-1: a singleton, two arithmetic progressions with a "
      "common difference, or two cosets of a subgroup of order p(G).");
  add_common(classify_cmd, classify_args.c);
  classify_cmd->add_option("--A", classify_args.a, "Set literal")->required();
  classify_cmd->add_option("--B", classify_args.b, "Set literal")->required();

  SdrArgs sdr_args;
  auto* sdr_cmd = app.add_subcommand(
      "sdr",
      "System of distinct representatives: distinct sums a_i + b_j outside a_1 + B with prescribed index windows, "
      "chosen through Hall's theorem as a maximum bipartite matching.");
  add_common(sdr_cmd, sdr_args.c);
  sdr_cmd->add_option("--A", sdr_args.a, "Ordered list {a_1,...,a_m}")->required();
  sdr_cmd->add_option("--B", sdr_args.b, "Ordered list {b_1,...,b_n}")->required();
  sdr_cmd->add_option("--S", sdr_args.s, "Excluded differences")->capture_default_str();
  sdr_cmd
      ->add_option("--variant", sdr_args.variant,
                   "prime: Z_p, i_k in {2..h+2, k+h+2}; triple: i_k in {2..3h, k+3h}; plain: A+B, i_k = k")
      ->check(CLI::IsMember({"prime", "triple", "plain"}))
      ->capture_default_str();

  FiberArgs fiber_args;
  auto* fiber_cmd = app.add_subcommand(
      "fiber",
      "Fiber spread for G = K1 ⊕ K2: the numbers of K1- and K2-cosets meeting A, whose maximum is at least "
      "sqrt|A| by pigeonhole.");
  add_common(fiber_cmd, fiber_args.c);
  fiber_cmd->add_option("--A", fiber_args.a, "Nonempty set")->required();
  fiber_cmd->add_option("--K1", fiber_args.k1, "First direct summand, as a set literal")->required();
  fiber_cmd->add_option("--K2", fiber_args.k2, "Second direct summand, as a set literal")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*sumset_cmd) return do_sumset(sumset_args, out);
    if (*verify_cmd) return do_verify(verify_args, out);
    if (*search_cmd) return do_search(search_args, out);
    if (*decompose_cmd) return do_decompose(decompose_args, out);
    if (*stabilizer_cmd) return do_stabilizer(stabilizer_args, out);
    if (*classify_cmd) return do_classify(classify_args, out);
    if (*sdr_cmd) return do_sdr(sdr_args, out);
    if (*fiber_cmd) return do_fiber(fiber_args, out);
  } catch (const LemmaViolation& e) {
    err << "violation: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace rsumlab::cli
