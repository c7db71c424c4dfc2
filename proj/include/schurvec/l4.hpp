#pragma once

#include <vector>

#include "schurvec/json_io.hpp"
#include "schurvec/report.hpp"
#include "schurvec/supervec.hpp"

namespace schurvec {

// Dimension calculus checks over a map corpus: additivity, the zero
// criterion, mono/epi monotonicity with its equality case, the supertrace
// of identities, and invertibility of objects. One report entry per item
// per map; failures are entries, never throws.
inline Report l4_suite(const std::vector<SuperMap>& corpus) {
  Report rep;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const SuperMap& f = corpus[k];
    OrderedJson inputs;
    inputs["index"] = k;
    inputs["map"] = map_to_json(f);
    auto entry = [&](const std::string& check, bool pass,
                     const std::string& details) {
      rep.add(CheckEntry{check, inputs, pass ? "pass" : "fail", std::nullopt,
                         details});
    };

    SuperDim sum = direct_sum(f.domain, f.codomain).dim;
    entry("dim-additive", sum == f.domain.dim + f.codomain.dim,
          "dim(dom (+) cod) = " + sum.to_string());

    bool zero_ok =
        (rank_dims(f).is_zero() == f.is_zero_map()) &&
        (f.domain.dim.is_zero() ==
         SuperMap::identity(f.domain).is_zero_map());
    entry("zero-iff-dim-zero", zero_ok,
          "image is zero exactly when the matrix vanishes");

    bool mono = is_mono(f), epi = is_epi(f);
    entry("mono-dim-monotone", !mono || f.domain.dim.leq(f.codomain.dim),
          mono ? "mono: " + f.domain.dim.to_string() + " <= " +
                     f.codomain.dim.to_string()
               : "not mono: vacuous");
    entry("epi-dim-monotone", !epi || f.codomain.dim.leq(f.domain.dim),
          epi ? "epi: " + f.codomain.dim.to_string() + " <= " +
                    f.domain.dim.to_string()
              : "not epi: vacuous");

    bool equal_dims = f.domain.dim == f.codomain.dim;
    bool eq_case = (!(mono && equal_dims) || epi) &&
                   (!(epi && equal_dims) || mono);
    entry("equal-dims-mono-epi", eq_case,
          equal_dims ? "equal dimensions" : "unequal dimensions: vacuous");

    Rational tr = supertrace(SuperMap::identity(f.domain));
    bool tr_ok = tr == f.domain.dim.even - f.domain.dim.odd &&
                 categorical_supertrace(SuperMap::identity(f.domain)) == tr;
    entry("supertrace-identity", tr_ok,
          "tr(id) = " + rational_to_string(tr) + " on " +
              f.domain.dim.to_string());

    bool unit_dim = f.domain.dim == SuperDim{1, 0} ||
                    f.domain.dim == SuperDim{0, 1};
    entry("invertible-iff-unit-dim", is_invertible(f.domain) == unit_dim,
          "object of dimension " + f.domain.dim.to_string());
  }
  return rep;
}

}  // namespace schurvec
