// End-to-end checks of the qent binary. The binary path arrives as argv[1]
// (wired up by CTest); remaining arguments go to doctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "qent/gates.hpp"
#include "qent/matrix_io.hpp"

using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

json run_json(const std::string& args) {
  const RunResult res = run_cli("--json " + args);
  CHECK(res.exit_code == 0);
  return json::parse(res.output);
}

}  // namespace

TEST_CASE("invariants command") {
  const json doc = run_json("invariants --gate cnot");
  CHECK(doc["command"] == "invariants");
  CHECK(std::abs(doc["results"]["g1"][0].get<double>()) < 1e-10);
  CHECK(std::abs(doc["results"]["g1"][1].get<double>()) < 1e-10);
  CHECK(doc["results"]["g2"][0].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(doc["tolerances"].contains("unitarity"));

  const json r0 = run_json("invariants --gate rprime --params 1,1,1,-1");
  CHECK(r0["results"]["g1"][0].get<double>() ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r0["results"]["g2"][0].get<double>() ==
        doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("classify command") {
  CHECK(run_json("classify --gate swap")["results"]["class"] ==
        "NonPerfectNonLocal");
  CHECK(run_json("classify --gate sqrt_swap")["results"]["class"] ==
        "PerfectEntangler");
  CHECK(run_json("classify --gate rprime --params 1,1,1,1")["results"]["class"] ==
        "NonPerfectNonLocal");
  CHECK(run_json("classify --gate identity")["results"]["class"] == "Local");
}

TEST_CASE("epower command") {
  const json quad = run_json("epower --gate cnot --method quad");
  CHECK(quad["results"]["value"].get<double>() ==
        doctest::Approx(2.0 / 9.0).epsilon(1e-9));

  const json closed = run_json("epower --gate swap --method closed");
  CHECK(closed["results"]["value"].get<double>() == 0.0);

  const json mc =
      run_json("epower --gate sqrt_swap --method mc --samples 50000 --seed 42");
  const double val = mc["results"]["value"].get<double>();
  const double se = mc["results"]["stderr"].get<double>();
  CHECK(std::abs(val - 1.0 / 6.0) <= 3.0 * se);
  CHECK(mc["seeds"]["mc"] == 42);
}

TEST_CASE("braid-check command and exit codes") {
  const RunResult pass = run_cli("braid-check --gate r");
  CHECK(pass.exit_code == 0);
  const RunResult fail = run_cli("braid-check --gate cnot");
  CHECK(fail.exit_code == 1);
  const RunResult yb = run_cli("--json braid-check --gate swap --relation yang-baxter");
  CHECK(yb.exit_code == 0);
  CHECK(json::parse(yb.output)["results"]["pass"] == true);
}

TEST_CASE("measure command") {
  const json doc = run_json("measure --state w --qubit 1");
  const json& outcomes = doc["results"]["outcomes"];
  CHECK(outcomes[0]["probability"].get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(outcomes[0]["residual_concurrence"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(outcomes[1]["probability"].get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(outcomes[1]["residual_concurrence"].get<double>() ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("basis-search command") {
  const json doc = run_json("basis-search --gate cnot --restarts 12 --seed 7");
  CHECK(doc["results"]["value"].get<double>() >= 1.0 - 1e-6);
  CHECK(doc["results"]["basis"].size() == 6);
}

TEST_CASE("global flags work before and after the subcommand") {
  const RunResult lead = run_cli("--json epower --gate swap --method closed");
  const RunResult trail = run_cli("epower --gate swap --method closed --json");
  CHECK(lead.exit_code == 0);
  CHECK(lead.output == trail.output);
}

TEST_CASE("json output is byte-identical across runs") {
  for (const std::string& args :
       {std::string("invariants --gate sqrt_swap"),
        std::string("epower --gate r --method mc --samples 20000 --seed 9"),
        std::string("basis-search --gate rprime0 --restarts 6 --seed 7"),
        std::string("measure --state ghz --qubit 2 --basis x"),
        std::string("classify --gate rprime --params i,1,1,i")}) {
    const RunResult a = run_cli("--json " + args);
    const RunResult b = run_cli("--json " + args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
  }
}

TEST_CASE("matrix export and round trip") {
  const std::string path = "/tmp/qent_test_roundtrip.json";
  const RunResult exp = run_cli("catalog --gate u_phi --params 0.3 --export " + path);
  CHECK(exp.exit_code == 0);

  // re-read: entrywise identical to the catalog matrix
  const qent::SquareMatrix read_back = qent::read_matrix_json(path);
  const qent::Gate orig = qent::catalog_gate(
      "u_phi", std::vector<qent::Complex>{qent::Complex(0.3, 0.0)});
  REQUIRE(read_back.dim() == 4);
  CHECK(qent::max_abs_diff(read_back, orig.matrix) == 0.0);

  // and the CLI accepts it as a file gate with the same invariants
  const json from_file = run_json("invariants --file " + path);
  const json from_catalog = run_json("invariants --gate u_phi --params 0.3");
  CHECK(from_file["results"]["g1"] == from_catalog["results"]["g1"]);
  CHECK(from_file["results"]["g2"] == from_catalog["results"]["g2"]);
  std::remove(path.c_str());
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("invariants --gate nope").exit_code == 2);
  CHECK(run_cli("invariants").exit_code == 2);
  CHECK(run_cli("invariants --gate cnot --file /tmp/x.json").exit_code == 2);
  CHECK(run_cli("invariants --file /nonexistent/x.json").exit_code == 2);
  CHECK(run_cli("measure --state w --qubit 9").exit_code == 2);
  CHECK(run_cli("epower --gate cnot --method bogus").exit_code == 2);
  CHECK(run_cli("nonsense-command").exit_code == 2);

  // a non-unitary matrix file is rejected
  const std::string bad = "/tmp/qent_test_bad.json";
  FILE* f = fopen(bad.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs("{\"dim\": 4, \"entries\": [[2,0],[0,0],[0,0],[0,0],[0,0],[1,0],[0,0],"
        "[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[0,0],[1,0]]}",
        f);
  fclose(f);
  CHECK(run_cli("invariants --file " + bad).exit_code == 2);
  std::remove(bad.c_str());
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int first_doctest_arg = 1;
  if (argc > 1 && argv[1][0] != '-') {
    g_binary = argv[1];
    first_doctest_arg = 2;
  } else {
    g_binary = "./build/tools/qent";
  }
  ctx.applyCommandLine(argc - first_doctest_arg + 1, argv + first_doctest_arg - 1);
  return ctx.run();
}
