// Command line front end: graded dimensions, vanishing sets, dimension
// recovery, Littlewood-Richardson coefficients, property checks on maps and
// sequences, and seeded suites. Exit codes: 0 all checks pass, 1 a check
// failed (including violated internal invariants), 2 usage or input errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "schurvec/json_io.hpp"
#include "schurvec/property_s.hpp"
#include "schurvec/sequences.hpp"
#include "schurvec/suites.hpp"
#include "schurvec/vanishing.hpp"

namespace {

using namespace schurvec;

Caps caps_from_env() {
  Caps caps;
  if (const char* s = std::getenv("SCHURVEC_MAX_DEGREE")) {
    int v = std::atoi(s);
    if (v < 1) throw precondition_error("SCHURVEC_MAX_DEGREE must be >= 1");
    caps.max_degree = v;
  }
  if (const char* s = std::getenv("SCHURVEC_MAX_DIM")) {
    int v = std::atoi(s);
    if (v < 1) throw precondition_error("SCHURVEC_MAX_DIM must be >= 1");
    caps.max_space_total_dim = v;
  }
  return caps;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw precondition_error("malformed JSON in " + path + ": " + e.what());
  }
}

std::string verdict_witness(const PropertySVerdict& v) {
  return v.witness ? v.witness->to_string() : "-";
}

OrderedJson property_verdict_json(const PropertySVerdict& v, bool op_side) {
  OrderedJson j;
  j[op_side ? "is_epi" : "is_mono"] = v.is_mono;
  j["bound"] = v.bound;
  if (v.witness) j["witness"] = v.witness->to_string();
  j["consistent"] = v.consistent;
  j["inconclusive"] = v.inconclusive;
  j["certification"] = v.certification;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Schur functor calculus on super vector spaces"};
  app.require_subcommand(1);
  Caps caps = caps_from_env();

  std::string dim_text, lambda_text, output = "table";
  int bound = 0;

  auto* sdim = app.add_subcommand("sdim", "graded dimension of S_lambda");
  sdim->add_option("dim", dim_text, "space dimension m|n")->required();
  sdim->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();

  auto* vanish = app.add_subcommand("vanish", "vanishing partitions");
  vanish->add_option("dim", dim_text, "space dimension m|n")->required();
  vanish->add_option("--max", bound, "largest partition size")->required();
  vanish->add_option("--output", output, "json or table");

  auto* recover = app.add_subcommand(
      "recover", "recover m|n from the vanishing oracle");
  recover->add_option("dim", dim_text, "space dimension m|n")->required();
  recover->add_option("--max", bound, "largest rectangle area queried")
      ->required();

  std::string mu_text, nu_text;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("lambda", lambda_text, "outer partition")->required();
  lr->add_option("mu", mu_text, "first factor")->required();
  lr->add_option("nu", nu_text, "second factor")->required();

  auto* check = app.add_subcommand("check", "verify a property of an input");
  check->require_subcommand(1);
  std::string map_path, seq_path;
  auto* prop = check->add_subcommand("property-s", "property S of a map");
  prop->add_option("--map", map_path, "JSON file with the map")->required();
  prop->add_option("--max", bound, "witness size bound (0 = automatic)");
  prop->add_flag("--op", "check the dual property on the same map");
  prop->add_option("--output", output, "json or table");
  auto* dimexact = check->add_subcommand("dim-exact", "dimension exactness");
  dimexact->add_option("--seq", seq_path, "JSON file with {i, p}")->required();
  dimexact->add_option("--output", output, "json or table");
  auto* p4 = check->add_subcommand("p4", "sum inequality on an exact sequence");
  p4->add_option("--seq", seq_path, "JSON file with {i, p}")->required();
  p4->add_option("--output", output, "json or table");

  std::string suite_name;
  std::uint64_t seed = 0;
  RunConfig cfg;
  auto* suite = app.add_subcommand("suite", "seeded check suites");
  suite->add_option("name", suite_name, "l4, props, or all")->required();
  suite->add_option("--seed", seed, "corpus seed");
  suite->add_option("--output", cfg.output, "json or table");
  suite->add_option("--max-partition-size", cfg.max_partition_size,
                    "partition size cap for sweeps");
  suite->add_option("--max-space-dim", cfg.max_space_dim,
                    "even+odd cap for generated spaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (sdim->parsed()) {
    SuperDim d = SuperDim::parse(dim_text);
    Partition lambda = Partition::parse(lambda_text);
    std::cout << graded_dimension(lambda, d).to_string() << "\n";
    return 0;
  }

  if (vanish->parsed()) {
    SuperDim d = SuperDim::parse(dim_text);
    VanishingSet vs = vanishing_set(SuperSpace{d}, bound, caps);
    if (output == "json") {
      OrderedJson j;
      j["dim"] = d.to_string();
      j["bound"] = bound;
      OrderedJson members = OrderedJson::array();
      for (const auto& lam : vs.members) members.push_back(lam.to_string());
      j["vanishing"] = std::move(members);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& lam : vs.members) std::cout << lam.to_string() << "\n";
    }
    return 0;
  }

  if (recover->parsed()) {
    SuperDim d = SuperDim::parse(dim_text);
    SuperDim got = superdim_from_vanishing(
        [&](const Partition& lam) {
          return graded_dimension(lam, d).is_zero();
        },
        bound);
    std::cout << got.to_string() << "\n";
    if (!(got == d))
      throw contract_violation("recovered dimension disagrees with input");
    return 0;
  }

  if (lr->parsed()) {
    std::cout << lr_coefficient(Partition::parse(lambda_text),
                                Partition::parse(mu_text),
                                Partition::parse(nu_text), caps)
              << "\n";
    return 0;
  }

  if (prop->parsed()) {
    SuperMap f = map_from_json(load_json(map_path));
    bool op_side = prop->count("--op") > 0;
    PropertySVerdict v = op_side ? check_property_S_op(f, bound, caps)
                                 : check_property_S(f, bound, caps);
    if (output == "json")
      std::cout << property_verdict_json(v, op_side).dump(2) << "\n";
    else
      std::cout << (op_side ? "is_epi " : "is_mono ")
                << (v.is_mono ? "true" : "false") << ", bound " << v.bound
                << ", witness " << verdict_witness(v) << ", "
                << v.certification << "\n";
    return v.consistent && !v.inconclusive ? 0 : 1;
  }

  if (dimexact->parsed()) {
    ZeroSequence seq = sequence_from_json(load_json(seq_path));
    DimExactReport r = is_dim_exact(seq);
    if (output == "json") {
      OrderedJson j;
      j["middle"] = r.middle.to_string();
      j["ends_sum"] = r.ends_sum.to_string();
      j["dim_exact"] = r.dim_exact;
      j["exact_at_middle"] = r.exact_at_middle;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "dim(M) = " << r.middle.to_string()
                << ", dim(M') + dim(M'') = " << r.ends_sum.to_string()
                << (r.dim_exact ? ", dim-exact" : ", not dim-exact") << "\n";
    }
    return r.dim_exact ? 0 : 1;
  }

  if (p4->parsed()) {
    ZeroSequence seq = sequence_from_json(load_json(seq_path));
    bool ok = check_p4_inequality(seq);
    std::cout << (ok ? "inequality holds" : "inequality violated") << "\n";
    return ok ? 0 : 1;
  }

  if (suite->parsed()) {
    cfg.seed = seed;
    cfg.validate();
    Report rep = run_suite(suite_name, cfg, caps);
    if (cfg.output == "json")
      std::cout << suite_to_json(suite_name, cfg, rep).dump(2) << "\n";
    else
      std::cout << rep.to_table();
    return rep.all_pass() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const schurvec::contract_violation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
