#include "compactlab/cli.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "compactlab/criteria.hpp"
#include "compactlab/parse.hpp"
#include "compactlab/report.hpp"

namespace compactlab::cli {

namespace {

constexpr unsigned long long kDefaultSeed = 1;

const char* kUsage = R"USAGE(usage: compactlab <command> [options]

commands:
  converge      --oracle <gromov|point:<pt>|orbital:<measure>|declared:<name>>
                --seq <spec> --target <pt> --depth <d> --horizon <N>
  pushforward   --measure <m> --element <w> --cylinder <w>
  poisson       --measure <m> --function <f> --element <w>
  criteria      contractivity   --measure <m> --function <f> --radius <R>
                multiplicativity --measure <m> --function <f> --function2 <g> --element <w>
                residual        --measure <m> --function <f> --phi <list> --radius <R> --epsilon <p/q>
  witness       gromov --point <pt> [--depth <d>] [--horizon <N>]
  examples      run <z-two-point|dihedral|lamplighter|gromov-witness|orbital-agreement|all>
                [--seed <s>] [--trials <n>]
  audit         <z2|dihedral|file:<path>>

common options: --rank <r> (default 2), --format <json|csv>, --config <path>,
                --seed <s>

measures:   uniform | dirac:<point> | table:<path>
functions:  cyl:<word> | const:<p/q> | table:<path>
sequences:  powers:<w> | prefixes:<pt> | prefix-inverses:<pt> | explicit:<w1,...>
            | rtrans:<spec>;<w>
points:     <word>(<period>), e.g. "ab(aB)"; words use a..z with A..Z inverses,
            "1" is the identity.
)USAGE";

struct Options {
  std::string verb;
  std::vector<std::string> positionals;
  std::map<std::string, std::string> flags;

  const std::string& require(const std::string& key) const {
    auto it = flags.find(key);
    if (it == flags.end()) throw Error("missing required option --" + key);
    return it->second;
  }
  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = flags.find(key);
    return it == flags.end() ? fallback : it->second;
  }
  long get_long(const std::string& key, long fallback) const {
    auto it = flags.find(key);
    if (it == flags.end()) return fallback;
    try {
      std::size_t used = 0;
      long v = std::stol(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing junk");
      return v;
    } catch (const std::exception&) {
      throw Error("option --" + key + " expects an integer, got '" + it->second + "'");
    }
  }
};

Options parse_options(const std::vector<std::string>& args) {
  if (args.empty()) throw Error("no command given");
  Options opt;
  opt.verb = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.rfind("--", 0) == 0) {
      const std::string key = arg.substr(2);
      if (key.empty()) throw Error("empty option name");
      if (i + 1 >= args.size()) throw Error("option --" + key + " needs a value");
      opt.flags[key] = args[++i];
    } else {
      opt.positionals.push_back(arg);
    }
  }
  if (auto it = opt.flags.find("config"); it != opt.flags.end()) {
    for (const auto& [key, value] : parse_config_file(it->second)) {
      opt.flags.try_emplace(key, value);  // explicit flags win
    }
  }
  return opt;
}

int rank_of(const Options& opt) {
  long rank = opt.get_long("rank", 2);
  if (rank < 1 || rank > 26) throw Error("--rank must be in [1, 26]");
  return static_cast<int>(rank);
}

int emit(std::ostream& out, const Json& report) {
  out << report.dump(2) << "\n";
  const std::string status = report.at("status").get<std::string>();
  return (status == "pass" || status == "supported") ? 0 : 1;
}

// ---------------------------------------------------------------------------
// converge
// ---------------------------------------------------------------------------

int run_converge(const Options& opt, std::ostream& out) {
  const int rank = rank_of(opt);
  const std::string oracle_text = opt.require("oracle");
  const std::string seq_text = opt.require("seq");
  const std::string target_text = opt.require("target");
  const long depth = opt.get_long("depth", 6);
  const long horizon = opt.get_long("horizon", 50);
  if (depth < 1) throw Error("--depth must be >= 1");
  if (horizon < 1) throw Error("--horizon must be >= 1");

  std::ostringstream cmd;
  cmd << "converge --oracle " << oracle_text << " --seq " << seq_text << " --target "
      << target_text << " --depth " << depth << " --horizon " << horizon << " --rank "
      << rank;

  if (oracle_text.rfind("declared:", 0) == 0) {
    const std::string name = oracle_text.substr(9);
    DeclaredSystem system = name == "z2"         ? DeclaredSystem::z_two_point()
                            : name == "dihedral" ? DeclaredSystem::dihedral_two_point()
                            : name.rfind("file:", 0) == 0
                                ? parse_declared_system_file(name.substr(5))
                                : throw Error("unknown declared system '" + name + "'");
    const DeclaredClass* cls = nullptr;
    for (const auto& c : system.classes()) {
      if (c.name == seq_text) cls = &c;
    }
    if (!cls)
      throw Error("system '" + system.name() + "' has no sequence class '" + seq_text +
                  "'");
    int target = -1;
    for (std::size_t i = 0; i < system.points().size(); ++i) {
      if (system.points()[i] == target_text) target = static_cast<int>(i);
    }
    if (target < 0) throw Error("unknown point '" + target_text + "'");
    const bool supported = cls->declared_limit == target;
    Json result;
    result["system"] = system.name();
    result["class"] = cls->name;
    result["declared_limit"] =
        system.points()[static_cast<std::size_t>(cls->declared_limit)];
    result["target"] = target_text;
    return emit(out, make_report(cmd.str(), supported ? "supported" : "refuted",
                                 std::move(result)));
  }

  TopologyOracle oracle = [&]() -> TopologyOracle {
    if (oracle_text == "gromov") return TopologyOracle::gromov(rank);
    if (oracle_text.rfind("point:", 0) == 0)
      return TopologyOracle::point_orbital(BoundaryPoint::parse(oracle_text.substr(6), rank));
    if (oracle_text.rfind("orbital:", 0) == 0)
      return TopologyOracle::orbital(parse_measure(oracle_text.substr(8), rank));
    throw Error("unknown oracle '" + oracle_text + "'");
  }();

  const SequenceSpec seq = SequenceSpec::parse(seq_text, rank);
  const BoundaryPoint target = BoundaryPoint::parse(target_text, rank);
  const ConvergenceVerdict verdict = oracle_decide(
      oracle, seq, target, static_cast<std::size_t>(depth), static_cast<int>(horizon));
  return emit(out, make_report(cmd.str(), verdict.supported() ? "supported" : "refuted",
                               to_json(verdict)));
}

// ---------------------------------------------------------------------------
// pushforward / poisson
// ---------------------------------------------------------------------------

int run_pushforward(const Options& opt, std::ostream& out) {
  const int rank = rank_of(opt);
  const CylinderMeasure nu = parse_measure(opt.require("measure"), rank);
  const ReducedWord g = ReducedWord::parse(opt.require("element"), rank);
  const ReducedWord base = ReducedWord::parse(opt.require("cylinder"), rank);
  std::ostringstream cmd;
  cmd << "pushforward --measure " << opt.require("measure") << " --element " << g.str()
      << " --cylinder " << base.str() << " --rank " << rank;
  Json result;
  result["mass"] = format_rational(pushforward_mass(g, nu, Cylinder{base}));
  return emit(out, make_report(cmd.str(), "pass", std::move(result)));
}

int run_poisson(const Options& opt, std::ostream& out) {
  const int rank = rank_of(opt);
  const CylinderMeasure nu = parse_measure(opt.require("measure"), rank);
  const CylinderFunction f = parse_function(opt.require("function"), rank);
  const ReducedWord g = ReducedWord::parse(opt.require("element"), rank);
  std::ostringstream cmd;
  cmd << "poisson --measure " << opt.require("measure") << " --function "
      << opt.require("function") << " --element " << g.str() << " --rank " << rank;
  Json result;
  result["value"] = format_rational(poisson_eval(f, nu, g));
  return emit(out, make_report(cmd.str(), "pass", std::move(result)));
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

int run_criteria(const Options& opt, std::ostream& out) {
  if (opt.positionals.size() != 1)
    throw Error("criteria needs a mode: contractivity | multiplicativity | residual");
  const std::string& mode = opt.positionals[0];
  const int rank = rank_of(opt);
  const CylinderMeasure nu = parse_measure(opt.require("measure"), rank);
  const CylinderFunction f = parse_function(opt.require("function"), rank);

  if (mode == "contractivity") {
    const long radius = opt.get_long("radius", 6);
    if (radius < 0) throw Error("--radius must be >= 0");
    std::ostringstream cmd;
    cmd << "criteria contractivity --measure " << opt.require("measure") << " --function "
        << opt.require("function") << " --radius " << radius << " --rank " << rank;
    Json result;
    result["radius"] = radius;
    result["deficit"] =
        format_rational(contractivity_deficit(nu, f, static_cast<std::size_t>(radius)));
    return emit(out, make_report(cmd.str(), "pass", std::move(result)));
  }
  if (mode == "multiplicativity") {
    const CylinderFunction g_fn = parse_function(opt.require("function2"), rank);
    const ReducedWord gamma = ReducedWord::parse(opt.require("element"), rank);
    std::ostringstream cmd;
    cmd << "criteria multiplicativity --measure " << opt.require("measure")
        << " --function " << opt.require("function") << " --function2 "
        << opt.require("function2") << " --element " << gamma.str() << " --rank " << rank;
    Json result;
    result["defect"] = format_rational(multiplicativity_defect(nu, f, g_fn, gamma));
    return emit(out, make_report(cmd.str(), "pass", std::move(result)));
  }
  if (mode == "residual") {
    const FiniteSupportFunction phi = parse_finite_support(opt.get("phi", ""), rank);
    const long radius = opt.get_long("radius", 6);
    if (radius < 0) throw Error("--radius must be >= 0");
    const Rational eps = parse_rational(opt.get("epsilon", "1/100"));
    std::ostringstream cmd;
    cmd << "criteria residual --measure " << opt.require("measure") << " --function "
        << opt.require("function") << " --phi " << opt.get("phi", "") << " --radius "
        << radius << " --epsilon " << format_rational(eps) << " --rank " << rank;
    const auto violations =
        decomposition_residual(f, phi, nu, static_cast<std::size_t>(radius), eps);
    Json result;
    result["radius"] = radius;
    result["epsilon"] = format_rational(eps);
    Json list = Json::array();
    for (const auto& v : violations) {
      list.push_back(Json{{"element", v.gamma.str()},
                          {"deviation", format_rational(v.deviation)}});
    }
    result["violations"] = std::move(list);
    result["c0_tail_certified"] = violations.empty();
    return emit(out, make_report(cmd.str(), violations.empty() ? "pass" : "fail",
                                 std::move(result)));
  }
  throw Error("unknown criteria mode '" + mode + "'");
}

// ---------------------------------------------------------------------------
// witness
// ---------------------------------------------------------------------------

int run_witness(const Options& opt, std::ostream& out) {
  if (opt.positionals.size() != 1 || opt.positionals[0] != "gromov")
    throw Error("witness supports: witness gromov --point <pt>");
  const int rank = rank_of(opt);
  const BoundaryPoint x0 = BoundaryPoint::parse(opt.require("point"), rank);
  const long depth = opt.get_long("depth", 6);
  const long horizon = opt.get_long("horizon", 12);
  if (depth < 1) throw Error("--depth must be >= 1");
  if (horizon < 2) throw Error("--horizon must be >= 2");
  std::ostringstream cmd;
  cmd << "witness gromov --point " << x0.str() << " --depth " << depth << " --horizon "
      << horizon << " --rank " << rank;
  const WitnessCertificate cert =
      gromov_witness(x0, static_cast<int>(horizon), static_cast<std::size_t>(depth));
  return emit(out,
              make_report(cmd.str(), cert.verified ? "pass" : "fail", to_json(cert)));
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

Json audit_payload(const DeclaredSystem& system) {
  FiniteAuditReport report = finite_audit(system);
  Json j = to_json(report);
  j["orbital_reduction_verified"] = finite_orbital_reduction_holds(system, 12);
  // The distal obstruction at finite scale: no candidate may pass the
  // point-orbital audit and survive an exhaustive projectivity probe.
  Json obstruction = Json::array();
  bool conjunction_empty = true;
  for (std::size_t x0 = 0; x0 < system.points().size(); ++x0) {
    const bool audit_pass = report.candidates[x0].point_orbital;
    const auto disagreement =
        finite_projectivity_disagreement(system, static_cast<int>(x0));
    Json entry;
    entry["candidate"] = system.points()[x0];
    entry["passes_point_orbital_audit"] = audit_pass;
    entry["projective"] = !disagreement.has_value();
    if (disagreement) {
      entry["probe_disagreement"] = Json{{"class", disagreement->cls},
                                         {"translate", disagreement->translate},
                                         {"base_limit", disagreement->base_limit},
                                         {"translated_limit", disagreement->translated_limit}};
    }
    if (audit_pass && !disagreement) conjunction_empty = false;
    obstruction.push_back(std::move(entry));
  }
  j["projectivity_obstruction"] = std::move(obstruction);
  j["no_projective_point_orbital_candidate"] = conjunction_empty;
  return j;
}

int run_audit(const Options& opt, std::ostream& out) {
  if (opt.positionals.size() != 1)
    throw Error("audit needs a system: z2 | dihedral | file:<path>");
  const std::string& target = opt.positionals[0];
  DeclaredSystem system = target == "z2"         ? DeclaredSystem::z_two_point()
                          : target == "dihedral" ? DeclaredSystem::dihedral_two_point()
                          : target.rfind("file:", 0) == 0
                              ? parse_declared_system_file(target.substr(5))
                              : throw Error("unknown audit system '" + target + "'");
  return emit(out, make_report("audit " + target, "pass", audit_payload(system)));
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool pass = false;
  Json detail;
};

SuiteResult suite_z_two_point() {
  SuiteResult r{"z-two-point", false, {}};
  const DeclaredSystem system = DeclaredSystem::z_two_point();
  const FiniteAuditReport report = finite_audit(system);
  bool witnesses_match = false;
  for (const auto& c : report.candidates) {
    if (c.candidate == "a")
      witnesses_match = !c.point_orbital && c.witness_class == "-2n" &&
                        c.declared_limit == "b" && c.orbit_limit == "a";
  }
  r.pass = !report.point_orbital && !report.orbital && witnesses_match &&
           finite_orbital_reduction_holds(system, 12);
  r.detail = to_json(report);
  return r;
}

SuiteResult suite_dihedral() {
  SuiteResult r{"dihedral", false, {}};
  const DeclaredSystem system = DeclaredSystem::dihedral_two_point();
  const FiniteAuditReport report = finite_audit(system);
  bool witnesses_match = true;
  for (const auto& c : report.candidates) {
    if (c.candidate == "a")
      witnesses_match = witnesses_match && !c.point_orbital && c.witness_class == "rho^-n";
    if (c.candidate == "b")
      witnesses_match = witnesses_match && !c.point_orbital && c.witness_class == "rho^n";
  }
  r.pass = !report.point_orbital && witnesses_match &&
           finite_orbital_reduction_holds(system, 12);
  r.detail = to_json(report);
  return r;
}

SuiteResult suite_lamplighter(unsigned long long seed, int trials) {
  SuiteResult r{"lamplighter", false, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> position(-20, 20);
  std::uniform_int_distribution<int> lamp_count(0, 6);
  std::uniform_int_distribution<long long> lamp(-10, 10);
  auto random_element = [&]() {
    LamplighterElement g;
    g.position = position(rng);
    const int count = lamp_count(rng);
    for (int i = 0; i < count; ++i) g.lamps.insert(lamp(rng));
    return g;
  };
  const LampConfig zero = LampConfig::finitely_supported({});
  int orbit_map_matches = 0;
  int equivariance_matches = 0;
  for (int i = 0; i < trials; ++i) {
    const LamplighterElement g = random_element();
    // The orbit map through the empty configuration recovers the lamp set.
    if (lamplighter_act(g, zero).support() == g.lamps) ++orbit_map_matches;
    const LamplighterElement h = random_element();
    const LampConfig via_product = lamplighter_act(lamplighter_multiply(g, h), zero);
    const LampConfig via_action = lamplighter_act(g, lamplighter_act(h, zero));
    if (via_product == via_action) ++equivariance_matches;
  }
  r.pass = orbit_map_matches == trials && equivariance_matches == trials;
  r.detail = Json{{"trials", trials},
                  {"orbit_map_matches", orbit_map_matches},
                  {"equivariance_matches", equivariance_matches}};
  return r;
}

SuiteResult suite_gromov_witness() {
  SuiteResult r{"gromov-witness", false, {}};
  // The worked two-generator point with tail blocks a^2, a^-3, a, a^7, ...
  const BoundaryPoint paper_point = BoundaryPoint::parse("aaBAAAbbbbbab(aaaaaaab)", 2);
  const std::vector<std::string> expected{"1", "bAA", "BBBBBaaabAA", "BABBBBBaaabAA"};
  bool prefix_inverses_match = true;
  Json ws = Json::array();
  for (int n = 1; n <= 4; ++n) {
    const std::string got = prefix_inverse_sequence(paper_point, n).str();
    prefix_inverses_match =
        prefix_inverses_match && got == expected[static_cast<std::size_t>(n - 1)];
    ws.push_back(got);
  }
  const WitnessCertificate single = gromov_witness(BoundaryPoint::parse("(a)", 2));
  const bool single_ok = single.verified &&
                         single.case_tag == WitnessCertificate::Case::SingleLetterTail &&
                         single.spec.str() == "powers:A";
  const WitnessCertificate blocks = gromov_witness(BoundaryPoint::parse("(ab)", 2));
  const bool blocks_ok = blocks.verified &&
                         blocks.case_tag == WitnessCertificate::Case::InfinitelyManyBlocks &&
                         prefix_inverse_sequence(BoundaryPoint::parse("(ab)", 2), 2).str() ==
                             "BA";
  const WitnessCertificate paper_cert = gromov_witness(paper_point);
  const GeodesicProductReport products =
      geodesic_product_check(BoundaryPoint::parse("(ab)", 2), 10);
  r.pass = prefix_inverses_match && single_ok && blocks_ok && paper_cert.verified &&
           products.all_zero() && products.products_checked == 45;
  r.detail = Json{{"prefix_inverses", std::move(ws)},
                  {"single_letter_certificate", to_json(single)},
                  {"blocks_certificate", to_json(blocks)},
                  {"paper_point_certificate_verified", paper_cert.verified},
                  {"geodesic_products", to_json(products)}};
  return r;
}

AgreementReport agreement_experiment(unsigned long long seed, std::size_t depth,
                                     int horizon, int spec_count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter_count(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  auto random_word = [&](int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    const int len = len_dist(rng);
    std::vector<Letter> letters;
    std::uniform_int_distribution<int> gen(0, 1);
    while (static_cast<int>(letters.size()) < len) {
      Letter l{static_cast<std::uint8_t>(gen(rng)), static_cast<std::int8_t>(coin(rng) ? 1 : -1)};
      if (!letters.empty() && letters.back().cancels(l)) continue;
      letters.push_back(l);
    }
    return ReducedWord(std::move(letters), 2);
  };
  auto random_point = [&]() {
    while (true) {
      try {
        return BoundaryPoint::make(random_word(letter_count(rng)),
                                   random_word(letter_count(rng)));
      } catch (const Error&) {
        // seam cancellation; draw again
      }
    }
  };
  std::vector<std::pair<SequenceSpec, BoundaryPoint>> specs;
  for (int i = 0; i < spec_count; ++i) {
    const BoundaryPoint x = random_point();
    if (i % 2 == 0) {
      specs.emplace_back(SequenceSpec::prefixes(x), x);
    } else {
      specs.emplace_back(SequenceSpec::prefixes(x).right_translated(random_word(3)), x);
    }
  }
  return orbital_agreement_experiment(CylinderMeasure::uniform(2), specs, depth, horizon);
}

SuiteResult suite_orbital_agreement(unsigned long long seed) {
  SuiteResult r{"orbital-agreement", false, {}};
  const AgreementReport report = agreement_experiment(seed, 3, 30, 10);
  r.pass = report.agreements == report.rows.size();
  r.detail = to_json(report);
  return r;
}

std::string agreement_csv(const AgreementReport& report) {
  std::ostringstream out;
  out << "spec,target,gromov,orbital,agree,gap_at_horizon\n";
  for (const auto& row : report.rows) {
    out << '"' << row.spec << '"' << ',' << row.target << ','
        << (row.gromov.supported() ? "supported" : "refuted") << ','
        << (row.orbital.supported() ? "supported" : "refuted") << ','
        << (row.agree ? "true" : "false") << ','
        << (row.orbital.gap_at_horizon ? format_rational(*row.orbital.gap_at_horizon)
                                       : "")
        << "\n";
  }
  return out.str();
}

int run_examples(const Options& opt, std::ostream& out) {
  if (opt.positionals.size() != 2 || opt.positionals[0] != "run")
    throw Error("examples supports: examples run <name|all>");
  const std::string& name = opt.positionals[1];
  const auto seed =
      static_cast<unsigned long long>(opt.get_long("seed", static_cast<long>(kDefaultSeed)));
  const int trials = static_cast<int>(opt.get_long("trials", 1000));
  if (trials < 1) throw Error("--trials must be >= 1");
  const std::string format = opt.get("format", "json");

  std::ostringstream cmd;
  cmd << "examples run " << name << " --seed " << seed << " --trials " << trials;

  if (format == "csv") {
    if (name != "orbital-agreement")
      throw Error("--format csv is only available for the orbital-agreement table");
    out << agreement_csv(agreement_experiment(seed, 3, 30, 10));
    return 0;
  }
  if (format != "json") throw Error("unknown format '" + format + "'");

  std::vector<SuiteResult> results;
  auto want = [&](const std::string& suite) { return name == "all" || name == suite; };
  if (want("z-two-point")) results.push_back(suite_z_two_point());
  if (want("dihedral")) results.push_back(suite_dihedral());
  if (want("lamplighter")) results.push_back(suite_lamplighter(seed, trials));
  if (want("gromov-witness")) results.push_back(suite_gromov_witness());
  if (want("orbital-agreement")) results.push_back(suite_orbital_agreement(seed));
  if (results.empty()) throw Error("unknown example suite '" + name + "'");

  bool all_pass = true;
  Json suites = Json::array();
  for (auto& result : results) {
    all_pass = all_pass && result.pass;
    suites.push_back(Json{{"suite", result.name},
                          {"status", result.pass ? "pass" : "fail"},
                          {"detail", std::move(result.detail)}});
  }
  Json payload;
  payload["suites"] = std::move(suites);
  return emit(out, make_report(cmd.str(), all_pass ? "pass" : "fail", std::move(payload),
                               seed));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      out << kUsage;
      return args.empty() ? 2 : 0;
    }
    const Options opt = parse_options(args);
    if (opt.verb == "converge") return run_converge(opt, out);
    if (opt.verb == "pushforward") return run_pushforward(opt, out);
    if (opt.verb == "poisson") return run_poisson(opt, out);
    if (opt.verb == "criteria") return run_criteria(opt, out);
    if (opt.verb == "witness") return run_witness(opt, out);
    if (opt.verb == "examples") return run_examples(opt, out);
    if (opt.verb == "audit") return run_audit(opt, out);
    throw Error("unknown command '" + opt.verb + "'");
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.position() >= 0) err << " (at position " << e.position() << ")";
    err << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace compactlab::cli
