#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "compactlab/cli.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = compactlab::cli::run(args, out, err);
  return CliResult{status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poisson command computes the worked value") {
  const CliResult r = invoke({"poisson", "--measure", "uniform", "--function", "cyl:a",
                              "--element", "a"});
  CHECK(r.status == 0);
  CHECK(r.json().at("result").at("value") == "3/4");
  CHECK(r.json().at("status") == "pass");
}

TEST_CASE("pushforward command") {
  const CliResult r = invoke({"pushforward", "--measure", "uniform", "--element", "a",
                              "--cylinder", "A"});
  CHECK(r.status == 0);
  CHECK(r.json().at("result").at("mass") == "1/12");
}

TEST_CASE("converge supports and refutes with matching exit codes") {
  const CliResult supported =
      invoke({"converge", "--oracle", "orbital:uniform", "--seq", "powers:a",
              "--target", "(a)", "--depth", "2", "--horizon", "20"});
  CHECK(supported.status == 0);
  CHECK(supported.json().at("status") == "supported");

  const CliResult refuted =
      invoke({"converge", "--oracle", "point:(a)", "--seq", "powers:A", "--target",
              "(A)", "--depth", "1", "--horizon", "20"});
  CHECK(refuted.status == 1);
  CHECK(refuted.json().at("status") == "refuted");
  CHECK(refuted.json().at("result").at("permanent") == true);
}

TEST_CASE("converge on a declared system") {
  const CliResult supported = invoke({"converge", "--oracle", "declared:z2", "--seq",
                                      "-2n", "--target", "b"});
  CHECK(supported.status == 0);
  const CliResult refuted = invoke({"converge", "--oracle", "declared:z2", "--seq",
                                    "-2n", "--target", "a"});
  CHECK(refuted.status == 1);
}

TEST_CASE("witness command emits a verified certificate and replays") {
  const CliResult r = invoke({"witness", "gromov", "--point", "(ab)"});
  CHECK(r.status == 0);
  const auto cert = r.json().at("result");
  CHECK(cert.at("verified") == true);
  CHECK(cert.at("case") == "infinitely-many-a-blocks");

  // Replayability: feed the recorded sequence back into converge.
  const std::string seq = cert.at("sequence").get<std::string>();
  const std::string target = cert.at("gromov_target").get<std::string>();
  const CliResult replay =
      invoke({"converge", "--oracle", "point:(ab)", "--seq", seq, "--target", target,
              "--depth", "1", "--horizon", "12"});
  CHECK(replay.status == 1);
  CHECK(replay.json().at("status") == "refuted");
  const std::string gseq = cert.at("gromov_sequence").get<std::string>();
  const CliResult gromov_replay =
      invoke({"converge", "--oracle", "gromov", "--seq", gseq, "--target", target,
              "--depth", "6", "--horizon", "12"});
  CHECK(gromov_replay.status == 0);
}

TEST_CASE("audit commands reproduce the two-point verdicts") {
  const CliResult z2 = invoke({"audit", "z2"});
  CHECK(z2.status == 0);
  const auto z2_result = z2.json().at("result");
  CHECK(z2_result.at("point_orbital") == false);
  CHECK(z2_result.at("orbital") == false);
  CHECK(z2_result.at("orbital_reduction_verified") == true);
  CHECK(z2_result.at("no_projective_point_orbital_candidate") == true);
  CHECK(z2_result.at("candidates")[0].at("witness_class") == "-2n");

  const CliResult dihedral = invoke({"audit", "dihedral"});
  CHECK(dihedral.status == 0);
  CHECK(dihedral.json().at("result").at("candidates")[0].at("witness_class") ==
        "rho^-n");
}

TEST_CASE("audit loads a custom declared system file") {
  const std::string path = "custom_system.json";
  {
    std::ofstream f(path);
    f << R"JSON({"name": "tau-a", "points": ["a", "b"],
             "classes": [
               {"name": "2n",  "image": {"a": "a", "b": "b"}, "limit": "a"},
               {"name": "-2n", "image": {"a": "a", "b": "b"}, "limit": "a"},
               {"name": "2n+1", "image": {"a": "b", "b": "a"}, "limit": "b"},
               {"name": "-(2n+1)", "image": {"a": "b", "b": "a"}, "limit": "b"}
             ]})JSON";
  }
  const CliResult r = invoke({"audit", "file:" + path});
  CHECK(r.status == 0);
  const auto result = r.json().at("result");
  CHECK(result.at("point_orbital") == true);  // tau_a by construction
  CHECK(result.at("no_projective_point_orbital_candidate") == true);  // still not projective
  std::remove(path.c_str());
}

TEST_CASE("examples run all passes every bundled suite") {
  const CliResult r = invoke({"examples", "run", "all", "--trials", "100"});
  CHECK(r.status == 0);
  const auto report = r.json();
  CHECK(report.at("status") == "pass");
  CHECK(report.at("seed") == 1);
  std::set<std::string> suites;
  for (const auto& suite : report.at("result").at("suites")) {
    suites.insert(suite.at("suite").get<std::string>());
    CHECK(suite.at("status") == "pass");
  }
  CHECK(suites.count("z-two-point") == 1);
  CHECK(suites.count("dihedral") == 1);
  CHECK(suites.count("lamplighter") == 1);
  CHECK(suites.count("gromov-witness") == 1);
  CHECK(suites.count("orbital-agreement") == 1);
}

TEST_CASE("reports are byte-identical across repeated invocations") {
  const std::vector<std::string> args{"examples", "run", "lamplighter", "--seed", "7",
                                      "--trials", "50"};
  const CliResult first = invoke(args);
  const CliResult second = invoke(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);

  const std::vector<std::string> witness_args{"witness", "gromov", "--point", "ab(ab)a(a)"};
  CHECK(invoke(witness_args).out == invoke(witness_args).out);
}

TEST_CASE("csv format renders the agreement table") {
  const CliResult r = invoke({"examples", "run", "orbital-agreement", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("spec,target,gromov,orbital,agree,gap_at_horizon\n", 0) == 0);
  CHECK(r.out.find("supported") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2 and a position-annotated message") {
  const CliResult unknown = invoke({"frobnicate"});
  CHECK(unknown.status == 2);
  const CliResult bad_word = invoke({"poisson", "--measure", "uniform", "--function",
                                     "cyl:a!", "--element", "a"});
  CHECK(bad_word.status == 2);
  CHECK(bad_word.err.find("position") != std::string::npos);
  const CliResult missing = invoke({"poisson", "--measure", "uniform"});
  CHECK(missing.status == 2);
}

TEST_CASE("config file supplies defaults that flags override") {
  const std::string path = "cli_config.txt";
  {
    std::ofstream f(path);
    f << "# defaults for converge\n";
    f << "depth = 2\n";
    f << "horizon = 20\n";
  }
  const CliResult from_config =
      invoke({"converge", "--oracle", "orbital:uniform", "--seq", "powers:a",
              "--target", "(a)", "--config", path});
  CHECK(from_config.status == 0);
  CHECK(from_config.json().at("result").at("depth") == 2);
  const CliResult overridden =
      invoke({"converge", "--oracle", "orbital:uniform", "--seq", "powers:a",
              "--target", "(a)", "--config", path, "--depth", "3"});
  CHECK(overridden.json().at("result").at("depth") == 3);
  std::remove(path.c_str());
}

TEST_CASE("command strings round-trip through their canonical form") {
  const CliResult first = invoke({"witness", "gromov", "--point", "ab(ab)a(a)"});
  REQUIRE(first.status == 0);
  const std::string canonical = first.json().at("command").get<std::string>();
  // Re-run the canonical command line; it must reproduce itself byte for byte.
  std::vector<std::string> args;
  std::istringstream tokens(canonical);
  std::string token;
  while (tokens >> token) args.push_back(token);
  const CliResult second = invoke(args);
  CHECK(second.json().at("command").get<std::string>() == canonical);
  CHECK(second.out == first.out);
}
