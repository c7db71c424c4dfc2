#pragma once

#include <string>

#include "schurvec/corpus.hpp"
#include "schurvec/l4.hpp"
#include "schurvec/property_s.hpp"
#include "schurvec/sequences.hpp"
#include "schurvec/vanishing.hpp"

namespace schurvec {

// Suite configuration. Identical config implies byte-identical JSON output.
struct RunConfig {
  int max_partition_size = 6;
  int max_space_dim = 3;  // cap on even + odd for generated spaces
  std::uint64_t seed = 0;
  std::string output = "json";

  void validate() const {
    if (max_partition_size < 1 || max_space_dim < 1)
      throw precondition_error("caps must be positive");
    if (output != "json" && output != "table")
      throw precondition_error("output must be json or table");
  }
};

namespace detail {

inline SuperSpace bounded_space(Rng& rng, int max_total) {
  int e = rng.uniform(0, max_total);
  int o = rng.uniform(0, max_total - e);
  return make_space(e, o);
}

}  // namespace detail

// Dimension-calculus checks on a seeded corpus mixing general maps with
// guaranteed monos, epis and isos, so the conditional items fire.
inline Report run_l4_suite(const RunConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed ^ 0x6c34u);
  std::vector<SuperMap> corpus;
  for (int k = 0; k < 20; ++k) {
    SuperSpace dom = detail::bounded_space(rng, cfg.max_space_dim);
    SuperSpace cod = detail::bounded_space(rng, cfg.max_space_dim);
    corpus.push_back(random_map(rng, dom, cod));
  }
  for (int k = 0; k < 8; ++k) {
    SuperSpace cod = detail::bounded_space(rng, cfg.max_space_dim);
    SuperSpace dom = make_space(rng.uniform(0, cod.dim.even),
                                rng.uniform(0, cod.dim.odd));
    corpus.push_back(random_mono(rng, dom, cod));
    corpus.push_back(random_epi(rng, cod, dom));
  }
  for (int k = 0; k < 4; ++k)
    corpus.push_back(
        random_iso(rng, detail::bounded_space(rng, cfg.max_space_dim)));
  return l4_suite(corpus);
}

namespace detail {

inline void property_entries(Report& rep, const SuperMap& f, std::size_t idx,
                             bool op_side, const Caps& caps) {
  const char* name = op_side ? "property-s-op" : "property-s";
  OrderedJson inputs;
  inputs["index"] = idx;
  inputs["map"] = map_to_json(f);
  CheckEntry e{name, inputs, "fail", std::nullopt, ""};
  try {
    PropertySVerdict v =
        op_side ? check_property_S_op(f, 0, caps) : check_property_S(f, 0, caps);
    if (v.witness) e.witness = v.witness->to_string();
    e.verdict = v.inconclusive ? "inconclusive"
                : v.consistent ? "pass"
                               : "fail";
    e.details = std::string(op_side ? "is_epi=" : "is_mono=") +
                (v.is_mono ? "true" : "false") + " bound=" +
                std::to_string(v.bound) + " certification=" + v.certification;
  } catch (const std::exception& ex) {
    e.details = ex.what();
  }
  rep.add(e);
}

}  // namespace detail

// Theorem checks over seeded corpora: property S and its dual on 300 maps,
// exactness and dimension counting on 100 zero-sequences, the sum
// inequality on 100 right-exact sequences, the direct-sum multiplicity
// identity, name separation, recovery of dimensions from vanishing, and the
// two supertrace routes.
inline Report run_props_suite(const RunConfig& cfg,
                              const Caps& caps = default_caps()) {
  cfg.validate();
  Report rep;

  {  // property S / S-op corpus: even <= 3, odd <= 2, entries in -2..2
    std::vector<SuperMap> corpus = map_corpus(cfg.seed ^ 0x500full, 300, 3, 2);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      detail::property_entries(rep, corpus[k], k, false, caps);
      detail::property_entries(rep, corpus[k], k, true, caps);
    }
  }

  {  // zero-sequences: Eq. (1), equality iff exact, induced cokernel map
    Rng rng(cfg.seed ^ 0x5e40ull);
    for (int k = 0; k < 100; ++k) {
      ZeroSequence seq = random_zero_sequence(rng, 3, 3);
      OrderedJson inputs;
      inputs["index"] = k;
      inputs["sequence"] = sequence_to_json(seq);
      CheckEntry e{"eq1-and-exactness", inputs, "fail", std::nullopt, ""};
      try {
        DimExactReport r = is_dim_exact(seq);
        e.verdict = "pass";
        e.details = "dim(M)=" + r.middle.to_string() + " dim(M')+dim(M'')=" +
                    r.ends_sum.to_string() +
                    (r.dim_exact ? " equal, exact" : " strict, not exact");
        rep.add(e);
        if (r.dim_exact) {
          bool iso = check_theorem_p2b(seq);
          rep.add(CheckEntry{"induced-cokernel-iso", inputs,
                             iso ? "pass" : "fail", std::nullopt,
                             "coker(i) -> M'' mono and epi"});
        }
      } catch (const std::exception& ex) {
        e.details = ex.what();
        rep.add(e);
      }
    }
  }

  {  // right-exact sequences: middle dimension bounded by the ends
    Rng rng(cfg.seed ^ 0x9411ull);
    for (int k = 0; k < 100; ++k) {
      ZeroSequence seq = random_right_exact(rng, 3, 3);
      OrderedJson inputs;
      inputs["index"] = k;
      inputs["sequence"] = sequence_to_json(seq);
      CheckEntry e{"sum-dim-inequality", inputs, "fail", std::nullopt, ""};
      try {
        bool ok = check_p4_inequality(seq);
        e.verdict = ok ? "pass" : "fail";
        e.details = "dim(M)=" + seq.i.codomain.dim.to_string() +
                    " <= " + (seq.i.domain.dim + seq.p.codomain.dim).to_string();
      } catch (const std::exception& ex) {
        e.details = ex.what();
      }
      rep.add(e);
    }
  }

  {  // Schur functor of a direct sum, on graded dimensions
    for (const Partition& lambda : partitions_up_to(5, caps)) {
      OrderedJson inputs;
      inputs["lambda"] = lambda.to_string();
      inputs["side_dims"] = "all with even+odd <= 2";
      bool all_ok = true;
      std::string bad;
      for (int ve = 0; ve <= 2 && all_ok; ++ve)
        for (int vo = 0; ve + vo <= 2 && all_ok; ++vo)
          for (int we = 0; we <= 2 && all_ok; ++we)
            for (int wo = 0; we + wo <= 2 && all_ok; ++wo)
              if (!check_schur_of_sum(lambda, make_space(ve, vo),
                                      make_space(we, wo), caps)) {
                all_ok = false;
                bad = make_space(ve, vo).dim.to_string() + " (+) " +
                      make_space(we, wo).dim.to_string();
              }
      rep.add(CheckEntry{"schur-of-sum", inputs, all_ok ? "pass" : "fail",
                         std::nullopt,
                         all_ok ? "all side dimensions agree"
                                : "mismatch at " + bad});
    }
  }

  {  // names separate distinct parallel maps
    Rng rng(cfg.seed ^ 0xa13eull);
    for (int k = 0; k < 100; ++k) {
      SuperSpace dom, cod;
      do {
        dom = detail::bounded_space(rng, 3);
        cod = detail::bounded_space(rng, 3);
      } while (dom.dim.even * cod.dim.even + dom.dim.odd * cod.dim.odd == 0);
      SuperMap f = random_map(rng, dom, cod);
      SuperMap g = random_map(rng, dom, cod);
      while (g == f) g = random_map(rng, dom, cod);
      bool sep = !(name_of(f) == name_of(g));
      bool zero_iff = name_of(f).is_zero_map() == f.is_zero_map();
      OrderedJson inputs;
      inputs["index"] = k;
      inputs["dims"] = dom.dim.to_string() + " -> " + cod.dim.to_string();
      rep.add(CheckEntry{"name-separates", inputs,
                         sep && zero_iff ? "pass" : "fail", std::nullopt,
                         "distinct parallel maps have distinct names"});
    }
  }

  {  // nonzero maps out of a one-dimensional space are mono
    Rng rng(cfg.seed ^ 0x1d1full);
    for (int k = 0; k < 50; ++k) {
      bool odd_source = rng.coin();
      SuperSpace dom = odd_source ? make_space(0, 1) : make_space(1, 0);
      SuperSpace cod;
      do {
        cod = detail::bounded_space(rng, 3);
      } while ((odd_source ? cod.dim.odd : cod.dim.even) == 0);
      SuperMap f = random_map(rng, dom, cod);
      while (f.is_zero_map()) f = random_map(rng, dom, cod);
      OrderedJson inputs;
      inputs["index"] = k;
      inputs["dims"] = dom.dim.to_string() + " -> " + cod.dim.to_string();
      rep.add(CheckEntry{"one-dim-source-mono", inputs,
                         is_mono(f) ? "pass" : "fail", std::nullopt,
                         "nonzero map from " + dom.dim.to_string()});
    }
  }

  {  // vanishing sieve and dimension recovery, from the counting oracle
    for (int e = 0; e + 0 <= cfg.max_space_dim; ++e)
      for (int o = 0; e + o <= cfg.max_space_dim; ++o) {
        SuperDim d{e, o};
        OrderedJson inputs;
        inputs["dim"] = d.to_string();
        CheckEntry sieve{"vanishing-sieve", inputs, "fail", std::nullopt, ""};
        try {
          VanishingSet vs =
              vanishing_set_by_dimension(d, cfg.max_partition_size, caps);
          Partition rect = rectangle(e + 1, o + 1);
          bool match = true;
          for (const Partition& lam :
               partitions_up_to(cfg.max_partition_size, caps))
            if (vs.contains_partition(lam) != contains(lam, rect))
              match = false;
          sieve.verdict = match ? "pass" : "fail";
          sieve.details = "members = partitions containing rectangle " +
                          rect.to_string();
        } catch (const std::exception& ex) {
          sieve.details = ex.what();
        }
        rep.add(sieve);

        CheckEntry rec{"superdim-recovery", inputs, "fail", std::nullopt, ""};
        try {
          SuperDim got = superdim_from_vanishing(
              [&](const Partition& lam) {
                return graded_dimension(lam, d).is_zero();
              },
              (e + 1) * (o + 1));
          rec.verdict = got == d ? "pass" : "fail";
          rec.details = "recovered " + got.to_string();
        } catch (const std::exception& ex) {
          rec.details = ex.what();
        }
        rep.add(rec);
      }
  }

  {  // supertrace: block formula vs categorical composite, and cyclicity
    Rng rng(cfg.seed ^ 0x7acell);
    for (int k = 0; k < 30; ++k) {
      SuperSpace v = detail::bounded_space(rng, cfg.max_space_dim);
      SuperSpace w = detail::bounded_space(rng, cfg.max_space_dim);
      SuperMap f = random_map(rng, v, w);
      SuperMap g = random_map(rng, w, v);
      bool routes =
          categorical_supertrace(compose(g, f)) == supertrace(compose(g, f));
      bool cyclic = supertrace(compose(g, f)) == supertrace(compose(f, g));
      OrderedJson inputs;
      inputs["index"] = k;
      inputs["dims"] = v.dim.to_string() + " <-> " + w.dim.to_string();
      rep.add(CheckEntry{"supertrace-routes", inputs,
                         routes && cyclic ? "pass" : "fail", std::nullopt,
                         "categorical route and cyclicity"});
    }
  }

  return rep;
}

inline Report run_suite(const std::string& which, const RunConfig& cfg,
                        const Caps& caps = default_caps()) {
  Report rep;
  if (which == "l4" || which == "all") rep.append(run_l4_suite(cfg));
  if (which == "props" || which == "all")
    rep.append(run_props_suite(cfg, caps));
  if (!(which == "l4" || which == "props" || which == "all"))
    throw precondition_error("unknown suite: " + which);
  return rep;
}

// Full machine-readable result: configuration echo, entries, summary.
inline OrderedJson suite_to_json(const std::string& which,
                                 const RunConfig& cfg, const Report& rep) {
  OrderedJson j;
  j["suite"] = which;
  j["seed"] = cfg.seed;
  j["config"] = OrderedJson{{"max_partition_size", cfg.max_partition_size},
                            {"max_space_dim", cfg.max_space_dim}};
  j["checks"] = rep.to_json();
  j["summary"] = OrderedJson{{"total", rep.entries.size()},
                             {"pass", rep.count("pass")},
                             {"fail", rep.count("fail")},
                             {"inconclusive", rep.count("inconclusive")}};
  return j;
}

}  // namespace schurvec
