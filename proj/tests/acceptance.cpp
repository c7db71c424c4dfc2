#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurvec/corpus.hpp"
#include "schurvec/l4.hpp"
#include "schurvec/property_s.hpp"
#include "schurvec/sequences.hpp"
#include "schurvec/suites.hpp"
#include "schurvec/vanishing.hpp"

using namespace schurvec;

namespace {

int failures_total = 0;
int failures_here = 0;

// Always-on requirement: never compiled out in Release.
#define CHECK(cond, msg)                                                    \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg   \
                << "\n";                                                    \
      ++failures_here;                                                      \
    }                                                                       \
  } while (0)

template <class Body>
void criterion(int n, const std::string& what, Body&& body) {
  failures_here = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& ex) {
    std::cerr << "[FAIL] criterion " << n << " threw: " << ex.what() << "\n";
    ++failures_here;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  failures_total += failures_here;
  std::cout << (failures_here == 0 ? "[PASS]" : "[FAIL]") << " criterion "
            << n << ": " << what << " (" << ms << " ms)\n";
}

std::vector<SuperDim> dims_up_to_total(int bound) {
  std::vector<SuperDim> out;
  for (int e = 0; e <= bound; ++e)
    for (int o = 0; e + o <= bound; ++o) out.push_back(SuperDim{e, o});
  return out;
}

// Realized dimensions of every summand with |lambda| <= 6 on every space of
// total dimension <= 3, computed once by brute symmetrizer rank and shared
// by criteria 1 and 6.
using SweepCache = std::map<std::pair<std::string, std::string>, SuperDim>;

SweepCache brute_sweep() {
  SweepCache cache;
  for (const SuperDim& d : dims_up_to_total(3))
    for (const Partition& lam : partitions_up_to(6)) {
      SchurObject s = schur_apply_space(lam, SuperSpace{d});
      cache[{d.to_string(), lam.to_string()}] = s.space.dim;
    }
  return cache;
}

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  SweepCache cache;

  criterion(1, "vanishing iff the shape contains the dimension rectangle, "
               "brute force, total dim <= 3, |lambda| <= 6", [&] {
    cache = brute_sweep();
    int cases = 0;
    for (const SuperDim& d : dims_up_to_total(3)) {
      Partition rect = rectangle(d.even + 1, d.odd + 1);
      for (const Partition& lam : partitions_up_to(6)) {
        bool vanished = cache.at({d.to_string(), lam.to_string()}).is_zero();
        CHECK(vanished == contains(lam, rect),
              "dim " << d.to_string() << " lambda " << lam.to_string()
                     << ": realized " << (vanished ? "zero" : "nonzero")
                     << ", rectangle containment says the opposite");
        ++cases;
      }
    }
    CHECK(cases == 10 * 29, "expected 290 cases, saw " << cases);
  });

  criterion(2, "property S and its dual on a seeded 300-map corpus, "
               "witnesses verified, no inconclusives at the derived bound",
            [&] {
    auto corpus = map_corpus(7, 300, 3, 2);
    CHECK(corpus.size() == 300, "corpus size " << corpus.size());
    int witnesses = 0;
    for (const SuperMap& f : corpus) {
      PropertySVerdict v = check_property_S(f);
      CHECK(v.consistent, "property S verdict inconsistent");
      CHECK(!v.inconclusive, "property S inconclusive at the derived bound");
      CHECK(v.is_mono == is_mono(f), "property S mono verdict wrong");
      if (!v.is_mono) {
        CHECK(v.witness.has_value(), "non-mono map lacks a witness");
        if (v.witness) {
          CHECK(graded_dimension(*v.witness, rank_dims(f)).is_zero(),
                "witness fails to kill the invertible part");
          CHECK(!graded_dimension(*v.witness, f.domain.dim).is_zero(),
                "witness kills the whole source");
          ++witnesses;
        }
      }
      PropertySVerdict w = check_property_S_op(f);
      CHECK(w.consistent, "property S-op verdict inconsistent");
      CHECK(!w.inconclusive, "property S-op inconclusive");
      CHECK(w.is_mono == is_epi(f), "property S-op epi verdict wrong");
      if (!w.is_mono) CHECK(w.witness.has_value(), "missing S-op witness");
    }
    CHECK(witnesses > 50, "too few non-mono maps: " << witnesses);
  });

  criterion(3, "dimension calculus: additivity, zero criterion, mono/epi "
               "monotonicity, equal-dimension case, supertrace of the "
               "identity, invertible objects", [&] {
    RunConfig cfg;
    cfg.seed = 7;
    Report rep = run_l4_suite(cfg);
    CHECK(rep.all_pass(), rep.count("fail") << " dimension-calculus items "
                          "failed out of " << rep.entries.size());
    CHECK(rep.entries.size() == 40 * 7,
          "expected 7 items per corpus map, saw " << rep.entries.size());
  });

  criterion(4, "0-sequences: middle bounds the ends, equality iff exact, "
               "induced cokernel map invertible on the exact ones", [&] {
    Rng rng(104);
    int exact = 0, inexact = 0;
    for (int k = 0; k < 100; ++k) {
      ZeroSequence seq = random_zero_sequence(rng, 3, 3);
      DimExactReport rep = is_dim_exact(seq);  // throws on any violation
      CHECK(rep.ends_sum.leq(rep.middle), "dimension inequality failed");
      CHECK(rep.dim_exact == rep.exact_at_middle,
            "dimension equality and exactness disagree");
      if (rep.dim_exact) {
        ++exact;
        CHECK(check_theorem_p2b(seq),
              "induced map from the cokernel is not invertible");
      } else {
        ++inexact;
        CHECK(rep.middle != rep.ends_sum, "inexact but dimensions equal");
      }
    }
    CHECK(exact > 10 && inexact > 10,
          "corpus too lopsided: " << exact << " exact, " << inexact
                                  << " inexact");
  });

  criterion(5, "right-exact sequences: middle dimension at most the sum of "
               "the ends; direct sums decompose with the multiplicity "
               "coefficients", [&] {
    Rng rng(105);
    for (int k = 0; k < 100; ++k)
      CHECK(check_p4_inequality(random_right_exact(rng, 3, 3)),
            "sum inequality failed on sequence " << k);
    for (const Partition& lam : partitions_up_to(5))
      for (const SuperDim& v : dims_up_to_total(2))
        for (const SuperDim& w : dims_up_to_total(2))
          CHECK(check_schur_of_sum(lam, SuperSpace{v}, SuperSpace{w}),
                "sum decomposition failed at lambda " << lam.to_string()
                    << ", " << v.to_string() << " (+) " << w.to_string());
  });

  criterion(6, "counting oracle matches brute ranks; power dimensions "
               "recombine with tableau multiplicities; symmetrizers are "
               "idempotent; realized functors compose", [&] {
    for (const SuperDim& d : dims_up_to_total(3))
      for (const Partition& lam : partitions_up_to(6))
        CHECK(cache.at({d.to_string(), lam.to_string()}) ==
                  graded_dimension(lam, d),
              "oracle mismatch at dim " << d.to_string() << " lambda "
                                        << lam.to_string());
    for (const SuperDim& d : dims_up_to_total(3))
      for (int n = 1; n <= 6; ++n) {
        long long sum = 0;
        for (const Partition& lam : partitions_of(n))
          sum += count_standard_tableaux(lam) *
                 cache.at({d.to_string(), lam.to_string()}).total();
        long long power = 1;
        for (int k = 0; k < n; ++k) power *= d.total();
        CHECK(sum == power, "power dimension mismatch at dim "
                                << d.to_string() << " n " << n);
      }
    for (const Partition& lam : partitions_up_to(6)) {
      GroupAlgebraElement e = young_symmetrizer(lam);
      CHECK(multiply(e, e) == e,
            "symmetrizer not idempotent at " << lam.to_string());
    }
    Rng rng(106);
    auto shapes = partitions_up_to(3);
    for (int k = 0; k < 50; ++k) {
      const Partition& lam = shapes[rng.uniform(0, 5)];
      SuperSpace a = random_space(rng, 2, 1);
      SuperSpace b = random_space(rng, 2, 1);
      SuperSpace c = random_space(rng, 2, 1);
      SuperMap f = random_map(rng, a, b);
      SuperMap g = random_map(rng, b, c);
      CHECK(schur_apply_map(lam, compose(g, f)) ==
                compose(schur_apply_map(lam, g), schur_apply_map(lam, f)),
            "functoriality failed at lambda " << lam.to_string());
    }
  });

  criterion(7, "names separate distinct parallel maps; nonzero maps out of "
               "one-dimensional spaces are mono", [&] {
    Rng rng(107);
    for (int k = 0; k < 100; ++k) {
      SuperSpace dom, cod;
      do {
        dom = random_space(rng, 3, 3);
        cod = random_space(rng, 3, 3);
      } while (dom.dim.even * cod.dim.even + dom.dim.odd * cod.dim.odd == 0);
      SuperMap f = random_map(rng, dom, cod);
      SuperMap g = random_map(rng, dom, cod);
      while (g == f) g = random_map(rng, dom, cod);
      CHECK(!(name_of(f) == name_of(g)), "names collide on pair " << k);
      CHECK(name_of(f).is_zero_map() == f.is_zero_map(),
            "zero name without zero map on pair " << k);
    }
    for (int k = 0; k < 50; ++k) {
      bool odd_source = rng.coin();
      SuperSpace dom = odd_source ? make_space(0, 1) : make_space(1, 0);
      SuperSpace cod;
      do {
        cod = random_space(rng, 3, 3);
      } while ((odd_source ? cod.dim.odd : cod.dim.even) == 0);
      SuperMap f = random_map(rng, dom, cod);
      while (f.is_zero_map()) f = random_map(rng, dom, cod);
      CHECK(is_mono(f), "nonzero map out of " << dom.dim.to_string()
                                              << " is not mono");
    }
  });

  criterion(8, "suite all --seed 7 is byte-identical across runs", [&] {
    CHECK(!cli.empty(), "no CLI binary path given as argv[1]");
    if (cli.empty()) return;
    std::string cmd = "\"" + cli + "\" suite all --seed 7 --output json";
    CliRun a = run_cli(cmd);
    CliRun b = run_cli(cmd);
    CHECK(a.exit_code == 0, "first run exited " << a.exit_code);
    CHECK(b.exit_code == 0, "second run exited " << b.exit_code);
    CHECK(!a.out.empty(), "first run produced no output");
    CHECK(a.out == b.out, "outputs differ between runs");
  });

  std::cout << (failures_total == 0 ? "ACCEPTANCE PASSED"
                                    : "ACCEPTANCE FAILED")
            << " (" << failures_total << " failing checks)\n";
  return failures_total == 0 ? 0 : 1;
}
