#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int failures_total = 0;
int failures_here = 0;

#define CHECK(cond, msg)                                                    \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg   \
                << "\n";                                                    \
      ++failures_here;                                                      \
    }                                                                       \
  } while (0)

struct CliRun {
  int exit_code;
  std::string out;  // stdout and stderr interleaved
};

std::string cli_path;

CliRun run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" + cli_path + "\" " +
                    args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

template <class Body>
void section(const std::string& what, Body&& body) {
  failures_here = 0;
  body();
  failures_total += failures_here;
  std::cout << (failures_here == 0 ? "[PASS] " : "[FAIL] ") << what << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_e2e <path-to-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  section("graded dimensions from the command line", [] {
    CliRun r = run("sdim '1|1' --lambda 2,2");
    CHECK(r.exit_code == 0, "exit " << r.exit_code);
    CHECK(r.out == "0|0\n", "got: " << r.out);
    CHECK(run("sdim '1|1' --lambda 3").out == "1|1\n", "symmetric cube");
    CHECK(run("sdim '2|0' --lambda 1,1,1").out == "0|0\n", "exterior cube");
    CHECK(run("sdim '0|1' --lambda 1,1,1").out == "0|1\n", "odd line cube");
    CHECK(run("sdim '3|2' --lambda -").out == "1|0\n", "empty shape is unit");
  });

  section("littlewood-richardson coefficients", [] {
    CHECK(run("lr 2,1 2 1").out == "1\n", "basic coefficient");
    CHECK(run("lr 3,2,1 2,1 2,1").out == "2\n", "multiplicity two");
    CHECK(run("lr 2,2 2 1,1").out == "0\n", "zero coefficient");
  });

  section("usage and input errors exit 2", [] {
    CliRun bad_dim = run("sdim 2 --lambda 1");
    CHECK(bad_dim.exit_code == 2, "exit " << bad_dim.exit_code);
    CHECK(contains(bad_dim.out, "error:"), "got: " << bad_dim.out);
    CliRun bad_part = run("sdim '1|1' --lambda 1,3");
    CHECK(bad_part.exit_code == 2, "exit " << bad_part.exit_code);
    CliRun unknown = run("summon");
    CHECK(unknown.exit_code == 2, "exit " << unknown.exit_code);
    CliRun help = run("--help");
    CHECK(help.exit_code == 0, "help exit " << help.exit_code);
    CHECK(contains(help.out, "suite"), "help lists subcommands");
  });

  section("vanishing sets in both output modes", [] {
    CliRun table = run("vanish '1|0' --max 3");
    CHECK(table.exit_code == 0, "exit " << table.exit_code);
    CHECK(table.out == "1,1\n2,1\n1,1,1\n", "got: " << table.out);
    CliRun js = run("vanish '1|0' --max 3 --output json");
    CHECK(js.exit_code == 0, "exit " << js.exit_code);
    json j = json::parse(js.out, nullptr, false);
    CHECK(!j.is_discarded(), "json parse failed: " << js.out);
    if (!j.is_discarded()) {
      CHECK(j["dim"] == "1|0", "dim echoed");
      CHECK(j["vanishing"] == json({"1,1", "2,1", "1,1,1"}),
            "members: " << j["vanishing"].dump());
    }
  });

  section("dimension recovery and its cap", [] {
    CliRun ok = run("recover '1|1' --max 4");
    CHECK(ok.exit_code == 0, "exit " << ok.exit_code);
    CHECK(ok.out == "1|1\n", "got: " << ok.out);
    CHECK(run("recover '2|0' --max 3").out == "2|0\n", "even plane");
    CliRun small = run("recover '1|1' --max 3");
    CHECK(small.exit_code == 2, "exit " << small.exit_code);
    CHECK(contains(small.out, "error:"), "got: " << small.out);
  });

  section("property check on a map file", [] {
    write_file("/tmp/schurvec_e2e_zero.json", R"({
      "domain": {"even": 1, "odd": 0},
      "codomain": {"even": 1, "odd": 0},
      "even_block": [["0"]],
      "odd_block": []
    })");
    CliRun r = run("check property-s --map /tmp/schurvec_e2e_zero.json");
    CHECK(r.exit_code == 0, "exit " << r.exit_code << ": " << r.out);
    CHECK(contains(r.out, "is_mono false"), "got: " << r.out);
    CHECK(contains(r.out, "witness 1"), "got: " << r.out);
    CliRun js = run(
        "check property-s --map /tmp/schurvec_e2e_zero.json --output json");
    json j = json::parse(js.out, nullptr, false);
    CHECK(!j.is_discarded(), "json parse failed: " << js.out);
    if (!j.is_discarded()) {
      CHECK(j["is_mono"] == false, "is_mono");
      CHECK(j["witness"] == "1", "witness");
      CHECK(j["consistent"] == true, "consistent");
    }
    CliRun op = run(
        "check property-s --map /tmp/schurvec_e2e_zero.json --op "
        "--output json");
    json jo = json::parse(op.out, nullptr, false);
    CHECK(!jo.is_discarded() && jo["is_epi"] == false, "op side");
  });

  section("a too-small bound exits 1 as inconclusive", [] {
    write_file("/tmp/schurvec_e2e_rank1.json", R"({
      "domain": {"even": 2, "odd": 0},
      "codomain": {"even": 2, "odd": 0},
      "even_block": [["1", "0"], ["0", "0"]],
      "odd_block": []
    })");
    CliRun r = run(
        "check property-s --map /tmp/schurvec_e2e_rank1.json --max 1");
    CHECK(r.exit_code == 1, "exit " << r.exit_code << ": " << r.out);
    CHECK(contains(r.out, "inconclusive"), "got: " << r.out);
    CliRun full = run("check property-s --map /tmp/schurvec_e2e_rank1.json");
    CHECK(full.exit_code == 0, "exit " << full.exit_code);
    CHECK(contains(full.out, "witness 1,1"), "got: " << full.out);
  });

  section("sequence checks on files", [] {
    write_file("/tmp/schurvec_e2e_exact.json", R"({
      "i": {"domain": {"even": 1, "odd": 0}, "codomain": {"even": 2, "odd": 0},
            "even_block": [["1"], ["0"]], "odd_block": []},
      "p": {"domain": {"even": 2, "odd": 0}, "codomain": {"even": 1, "odd": 0},
            "even_block": [["0", "1"]], "odd_block": []}
    })");
    CliRun exact = run("check dim-exact --seq /tmp/schurvec_e2e_exact.json");
    CHECK(exact.exit_code == 0, "exit " << exact.exit_code);
    CHECK(contains(exact.out, "dim-exact"), "got: " << exact.out);

    write_file("/tmp/schurvec_e2e_gap.json", R"({
      "i": {"domain": {"even": 1, "odd": 0}, "codomain": {"even": 3, "odd": 0},
            "even_block": [["1"], ["0"], ["0"]], "odd_block": []},
      "p": {"domain": {"even": 3, "odd": 0}, "codomain": {"even": 1, "odd": 0},
            "even_block": [["0", "0", "1"]], "odd_block": []}
    })");
    CliRun gap = run("check dim-exact --seq /tmp/schurvec_e2e_gap.json");
    CHECK(gap.exit_code == 1, "exit " << gap.exit_code);
    CHECK(contains(gap.out, "not dim-exact"), "got: " << gap.out);

    // first map not mono: a precondition failure, not a check failure
    write_file("/tmp/schurvec_e2e_badmono.json", R"({
      "i": {"domain": {"even": 2, "odd": 0}, "codomain": {"even": 2, "odd": 0},
            "even_block": [["1", "1"], ["0", "0"]], "odd_block": []},
      "p": {"domain": {"even": 2, "odd": 0}, "codomain": {"even": 1, "odd": 0},
            "even_block": [["0", "1"]], "odd_block": []}
    })");
    CliRun bad = run("check dim-exact --seq /tmp/schurvec_e2e_badmono.json");
    CHECK(bad.exit_code == 2, "exit " << bad.exit_code);
    CHECK(contains(bad.out, "not mono"), "got: " << bad.out);

    // p4 accepts the non-mono sequence: it is exact with an epi tail
    CliRun p4 = run("check p4 --seq /tmp/schurvec_e2e_badmono.json");
    CHECK(p4.exit_code == 0, "exit " << p4.exit_code);
    CHECK(contains(p4.out, "inequality holds"), "got: " << p4.out);
    CliRun p4gap = run("check p4 --seq /tmp/schurvec_e2e_gap.json");
    CHECK(p4gap.exit_code == 2, "exit " << p4gap.exit_code);
    CHECK(contains(p4gap.out, "not exact"), "got: " << p4gap.out);
  });

  section("malformed input files are reported with their path", [] {
    write_file("/tmp/schurvec_e2e_broken.json", "{\"domain\": ");
    CliRun r = run("check property-s --map /tmp/schurvec_e2e_broken.json");
    CHECK(r.exit_code == 2, "exit " << r.exit_code);
    CHECK(contains(r.out, "malformed JSON"), "got: " << r.out);
    CHECK(contains(r.out, "schurvec_e2e_broken.json"), "got: " << r.out);
    CliRun missing = run("check property-s --map /tmp/does_not_exist.json");
    CHECK(missing.exit_code == 2, "exit " << missing.exit_code);
    CHECK(contains(missing.out, "cannot open"), "got: " << missing.out);
  });

  section("environment caps are honored", [] {
    CliRun r = run("vanish '1|0' --max 3", "SCHURVEC_MAX_DEGREE=2");
    CHECK(r.exit_code == 2, "exit " << r.exit_code);
    CHECK(contains(r.out, "error:"), "got: " << r.out);
    CliRun ok = run("vanish '1|0' --max 2", "SCHURVEC_MAX_DEGREE=2");
    CHECK(ok.exit_code == 0, "exit " << ok.exit_code);
  });

  section("suite output is machine readable and round-trips", [] {
    CliRun r = run("suite l4 --seed 3 --output json");
    CHECK(r.exit_code == 0, "exit " << r.exit_code);
    json j = json::parse(r.out, nullptr, false);
    CHECK(!j.is_discarded(), "json parse failed");
    if (j.is_discarded()) return;
    CHECK(j["suite"] == "l4", "suite echoed");
    CHECK(j["seed"] == 3, "seed echoed");
    CHECK(j["summary"]["fail"] == 0, "failures: " << j["summary"].dump());
    CHECK(j["checks"].is_array() && !j["checks"].empty(), "checks present");
    // a map embedded in a suite entry is itself valid tool input
    json map = j["checks"][0]["inputs"]["map"];
    write_file("/tmp/schurvec_e2e_roundtrip.json", map.dump());
    CliRun back =
        run("check property-s --map /tmp/schurvec_e2e_roundtrip.json");
    CHECK(back.exit_code == 0, "exit " << back.exit_code << ": " << back.out);
    CliRun table = run("suite l4 --seed 3 --output table");
    CHECK(table.exit_code == 0, "exit " << table.exit_code);
    CHECK(contains(table.out, "0 fail"), "got summary: " << table.out);
  });

  std::cout << (failures_total == 0 ? "CLI E2E PASSED" : "CLI E2E FAILED")
            << " (" << failures_total << " failing checks)\n";
  return failures_total == 0 ? 0 : 1;
}
