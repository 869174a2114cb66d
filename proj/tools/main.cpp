#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowprimes/corpus.hpp"
#include "shadowprimes/io.hpp"
#include "shadowprimes/oracle.hpp"
#include "shadowprimes/shadow_theory.hpp"

using namespace shadowprimes;

namespace {

// 0 success, 1 mathematical negative, 2 usage/input error, 3 resource limit.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  std::string file;
  int power = 2;
  std::string method = "decomposition";
  std::string on;
  std::string apex;
  std::size_t edge = 0;
  std::string monomial;
  int max_power = 4;
  bool allow_heavy = false;
  int threads = 1;  // accepted for forward compatibility; execution is single-threaded
  std::string format = "text";
  bool expect_persistence = false;
  std::string name;
  bool all = false;
};

io::Format format_of(const Options& opt) {
  if (opt.format == "text") return io::Format::Text;
  if (opt.format == "structured") return io::Format::Structured;
  throw CLI::ValidationError("--format", "expected text|structured");
}

AssMethod method_of(const Options& opt) {
  if (opt.method == "localization") return AssMethod::Localization;
  if (opt.method == "decomposition") return AssMethod::Decomposition;
  if (opt.method == "oracle") return AssMethod::Oracle;
  if (opt.method == "both") return AssMethod::Both;
  throw CLI::ValidationError("--method", "expected localization|decomposition|oracle|both");
}

Limits make_limits(const Options& opt) {
  Limits limits = Limits::from_env();
  if (opt.allow_heavy) {
    limits.progress = [start = std::chrono::steady_clock::now()](const std::string& msg) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cerr << "[" << ms << "ms] " << msg << "\n";
    };
  }
  return limits;
}

VertexSet parse_on(const std::string& on, const Alphabet& alphabet) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= on.size()) {
    std::size_t comma = on.find(',', start);
    std::string part = comma == std::string::npos ? on.substr(start) : on.substr(start, comma - start);
    if (!part.empty()) names.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (names.empty()) fail(Errc::PreconditionFailed, "--on needs a comma-separated vertex list");
  return alphabet.set_of(names);
}

int cmd_validate(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  std::cout << io::emit_hypergraph(h);
  return kOk;
}

int cmd_covers(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  for (VertexSet c : minimal_vertex_covers(h))
    std::cout << io::emit_vertex_set(c, h.alphabet()) << "\n";
  return kOk;
}

int cmd_cover_ideal(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  std::cout << io::emit_ideal(cover_ideal(h, make_limits(opt))) << "\n";
  return kOk;
}

int cmd_ass(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  AssReport report = ass_of_power(h, opt.power, method_of(opt), make_limits(opt));
  std::cout << io::emit_ass_report(report, h.alphabet(), format_of(opt));
  return kOk;
}

int cmd_shadows(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  for (const Hypergraph& s : enumerate_shadows(h, make_limits(opt))) {
    VertexSet vp = embed_indices(s.alphabet().full_set(), s.alphabet(), h.alphabet());
    std::cout << io::emit_vertex_set(vp, h.alphabet()) << " :";
    for (VertexSet e : s.edges()) std::cout << " " << io::emit_vertex_set(e, s.alphabet());
    std::cout << "\n";
  }
  return kOk;
}

int cmd_shadow(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  VertexSet vp = parse_on(opt.on, h.alphabet());
  auto s = shadow_on(h, vp);
  if (!s) {
    std::cout << "no shadow on " << io::emit_vertex_set(vp, h.alphabet()) << "\n";
    return kNegative;
  }
  std::cout << io::emit_hypergraph(*s);
  return kOk;
}

int cmd_certify(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  std::cout << io::emit_certificates(odd_cycle_certificates(h, make_limits(opt)), h.alphabet(),
                                     format_of(opt));
  return kOk;
}

int cmd_dichotomy(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  auto cfg = detect_one_vertex_config(h, opt.apex);
  if (!cfg) fail(Errc::PreconditionFailed, "no one-vertex configuration at apex " + opt.apex);
  Monomial m = io::parse_monomial(opt.monomial, cfg->x_alphabet());
  DichotomyResult result = tildeH_dichotomy(*cfg, m, opt.power, make_limits(opt));
  std::cout << "case: " << (result.tag == DichotomyResult::Case::A ? "A" : "B") << "\n"
            << "prime: " << io::emit_vertex_set(result.certified_prime, h.alphabet()) << "\n"
            << "witness: " << io::emit_monomial(result.witness, h.alphabet()) << "\n";
  return kOk;
}

int cmd_transfer(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  auto cfg = detect_one_vertex_config(h, opt.apex);
  if (!cfg) fail(Errc::PreconditionFailed, "no one-vertex configuration at apex " + opt.apex);
  VertexSet p = parse_on(opt.on, h.alphabet());
  TransferOutcome outcome = transfer_down(*cfg, p, opt.power, make_limits(opt));
  if (outcome == TransferOutcome::ConditionFailed) {
    std::cout << "condition failed: prime is associated to (J(H)^s : " << opt.apex << ")\n";
    return kNegative;
  }
  VertexSet p_prime = p - VertexSet::of({cfg->apex});
  std::cout << "transferred: " << io::emit_vertex_set(p_prime, h.alphabet())
            << " is associated to J(H')^" << opt.power << "\n";
  return kOk;
}

int cmd_persistence(const Options& opt) {
  Hypergraph h = io::parse_hypergraph_file(opt.file);
  PersistenceReport report = persistence_check(h, opt.max_power, make_limits(opt));
  std::cout << io::emit_persistence_report(report, h.alphabet(), format_of(opt));
  if (opt.expect_persistence && !report.holds()) return kNegative;
  return kOk;
}

int cmd_extend(const Options& opt) {
  Hypergraph hp = io::parse_hypergraph_file(opt.file);
  OneVertexConfig cfg = extend_by_vertex(hp, opt.edge, opt.apex);
  std::cout << io::emit_hypergraph(cfg.h);
  return kOk;
}

int cmd_examples(const Options& opt) {
  if (!opt.all && opt.name.empty())
    fail(Errc::PreconditionFailed, "examples needs --name ID or --all");
  Limits limits = make_limits(opt);
  bool any_fail = false;
  bool any_limit = false;
  auto run = [&](const corpus::ExampleEntry& e) {
    corpus::ReplayResult r = corpus::replay(e, opt.allow_heavy, limits);
    const char* status = "PASS";
    switch (r.status) {
      case corpus::ReplayStatus::Pass: status = "PASS"; break;
      case corpus::ReplayStatus::Fail: status = "FAIL"; any_fail = true; break;
      case corpus::ReplayStatus::Skipped: status = "SKIPPED"; break;
      case corpus::ReplayStatus::ResourceLimited: status = "RESOURCE-LIMITED"; any_limit = true; break;
    }
    std::cout << e.id << ": " << status << "\n";
    for (const std::string& d : r.details) std::cout << "  " << d << "\n";
  };
  if (opt.all)
    for (const auto& e : corpus::all_entries()) run(e);
  else
    run(corpus::entry(opt.name));
  if (any_fail) return kNegative;
  if (any_limit) return kResource;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph shadows, cover ideals and associated primes of powers"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_file) {
    if (needs_file) cmd->add_option("file", opt.file, "hypergraph document")->required();
    cmd->add_option("--threads", opt.threads, "reserved; execution is single-threaded");
    cmd->add_flag("--allow-heavy", opt.allow_heavy, "run heavy computations, with checkpoints");
    return cmd;
  };

  auto* validate = add_common(app.add_subcommand("validate", "parse and re-emit canonically"), true);
  auto* covers = add_common(app.add_subcommand("covers", "minimal vertex covers"), true);
  auto* cover_ideal_cmd = add_common(app.add_subcommand("cover-ideal", "the cover ideal J(H)"), true);
  auto* ass = add_common(app.add_subcommand("ass", "associated primes of J(H)^s"), true);
  ass->add_option("--power", opt.power, "exponent s")->check(CLI::PositiveNumber);
  ass->add_option("--method", opt.method, "localization|decomposition|oracle|both");
  ass->add_option("--format", opt.format, "text|structured");
  auto* shadows = add_common(app.add_subcommand("shadows", "enumerate all shadows"), true);
  auto* shadow = add_common(app.add_subcommand("shadow", "the shadow on a vertex set"), true);
  shadow->add_option("--on", opt.on, "comma-separated vertex names")->required();
  auto* certify = add_common(app.add_subcommand("certify", "odd-cycle certificates for Ass(J^2)"), true);
  certify->add_option("--format", opt.format, "text|structured");
  auto* dichotomy = add_common(app.add_subcommand("dichotomy", "one-vertex-extension dichotomy"), true);
  dichotomy->add_option("--apex", opt.apex, "apex vertex name")->required();
  dichotomy->add_option("--monomial", opt.monomial, "witness monomial over X")->required();
  dichotomy->add_option("--power", opt.power, "exponent s")->check(CLI::PositiveNumber);
  auto* transfer = add_common(app.add_subcommand("transfer", "transfer p = p' + (apex) down to the shadow"), true);
  transfer->add_option("--apex", opt.apex, "apex vertex name")->required();
  transfer->add_option("--on", opt.on, "the prime p as comma-separated vertex names")->required();
  transfer->add_option("--power", opt.power, "exponent s")->check(CLI::PositiveNumber);
  auto* persistence = add_common(app.add_subcommand("persistence", "Ass(J^s) for s = 1..max and losses"), true);
  persistence->add_option("--max-power", opt.max_power, "largest exponent")->check(CLI::Range(2, 16));
  persistence->add_flag("--expect-persistence", opt.expect_persistence,
                        "exit 1 if persistence fails below the bound");
  persistence->add_option("--format", opt.format, "text|structured");
  auto* extend = add_common(app.add_subcommand("extend", "add a fresh apex to one edge"), true);
  extend->add_option("--edge", opt.edge, "edge index in canonical order")->required();
  extend->add_option("--apex", opt.apex, "new vertex name")->required();
  auto* examples = add_common(app.add_subcommand("examples", "replay the embedded corpus"), false);
  examples->add_option("--name", opt.name, "one entry id");
  examples->add_flag("--all", opt.all, "replay every entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (covers->parsed()) return cmd_covers(opt);
    if (cover_ideal_cmd->parsed()) return cmd_cover_ideal(opt);
    if (ass->parsed()) return cmd_ass(opt);
    if (shadows->parsed()) return cmd_shadows(opt);
    if (shadow->parsed()) return cmd_shadow(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (dichotomy->parsed()) return cmd_dichotomy(opt);
    if (transfer->parsed()) return cmd_transfer(opt);
    if (persistence->parsed()) return cmd_persistence(opt);
    if (extend->parsed()) return cmd_extend(opt);
    if (examples->parsed()) return cmd_examples(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ResourceLimit ? kResource : kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
