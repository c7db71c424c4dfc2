#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "schurvec/supervec.hpp"

namespace schurvec {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// draws below avoid std distributions, whose mapping is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Inclusive bounds; modulo mapping keeps the stream portable.
  int uniform(int lo, int hi) {
    if (hi < lo) throw precondition_error("uniform: empty range");
    return lo + static_cast<int>(next() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 eng_;
};

inline RatMat random_matrix(Rng& rng, int rows, int cols, int lo = -2,
                            int hi = 2) {
  RatMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

inline SuperSpace random_space(Rng& rng, int max_even, int max_odd) {
  return make_space(rng.uniform(0, max_even), rng.uniform(0, max_odd));
}

inline SuperMap random_map(Rng& rng, const SuperSpace& dom,
                           const SuperSpace& cod, int lo = -2, int hi = 2) {
  return SuperMap(dom, cod, random_matrix(rng, cod.dim.even, dom.dim.even, lo, hi),
                  random_matrix(rng, cod.dim.odd, dom.dim.odd, lo, hi));
}

// Mono with random entries when rejection finds one fast, identity-block
// inclusion otherwise. Requires dom <= cod componentwise.
inline SuperMap random_mono(Rng& rng, const SuperSpace& dom,
                            const SuperSpace& cod) {
  if (!dom.dim.leq(cod.dim))
    throw precondition_error("random_mono: domain does not fit");
  for (int tries = 0; tries < 32; ++tries) {
    SuperMap f = random_map(rng, dom, cod);
    if (is_mono(f)) return f;
  }
  SuperMap f = SuperMap::zero(dom, cod);
  for (int parity = 0; parity < 2; ++parity) {
    RatMat& b = f.block(parity);
    for (int c = 0; c < b.cols(); ++c) b(c, c) = 1;
  }
  return f;
}

inline SuperMap random_epi(Rng& rng, const SuperSpace& dom,
                           const SuperSpace& cod) {
  if (!cod.dim.leq(dom.dim))
    throw precondition_error("random_epi: codomain does not fit");
  return dual_transpose(random_mono(rng, dual(cod), dual(dom)));
}

inline SuperMap random_iso(Rng& rng, const SuperSpace& v) {
  for (int tries = 0; tries < 32; ++tries) {
    SuperMap f = random_map(rng, v, v);
    if (is_iso(f)) return f;
  }
  return SuperMap::identity(v);
}

// i mono, p epi, composite zero. Exact at the middle on a coin flip when a
// proper further quotient exists.
inline ZeroSequence random_zero_sequence(Rng& rng, int max_even = 3,
                                         int max_odd = 3) {
  SuperSpace m = random_space(rng, max_even, max_odd);
  SuperSpace sub = make_space(rng.uniform(0, m.dim.even),
                              rng.uniform(0, m.dim.odd));
  SuperMap i = compose(random_iso(rng, m), random_mono(rng, sub, m));
  SuperMap q = cokernel(i);
  SuperSpace c = q.codomain;
  bool shrink = rng.coin() && c.total() > 0;
  if (!shrink) return ZeroSequence(i, compose(random_iso(rng, c), q));
  SuperSpace c1 = c;
  if (c.dim.even > 0 && (c.dim.odd == 0 || rng.coin()))
    c1 = make_space(c.dim.even - 1, c.dim.odd);
  else
    c1 = make_space(c.dim.even, c.dim.odd - 1);
  SuperMap p = compose(random_epi(rng, c, c1), compose(random_iso(rng, c), q));
  return ZeroSequence(i, p);
}

// Exact at the middle with p epi; the first map need not be mono. Built by
// choosing the kernel of p as a subspace and covering it by a possibly
// larger source.
inline ZeroSequence random_right_exact(Rng& rng, int max_even = 3,
                                       int max_odd = 3) {
  SuperSpace m = random_space(rng, max_even, max_odd);
  SuperSpace ker = make_space(rng.uniform(0, m.dim.even),
                              rng.uniform(0, m.dim.odd));
  SuperMap incl = compose(random_iso(rng, m), random_mono(rng, ker, m));
  SuperMap p = compose(random_iso(rng, cokernel(incl).codomain),
                       cokernel(incl));
  SuperSpace src = make_space(ker.dim.even + rng.uniform(0, 1),
                              ker.dim.odd + rng.uniform(0, 1));
  SuperMap i = compose(incl, random_epi(rng, src, ker));
  return ZeroSequence(i, p);
}

// Fixed-profile map corpus: dimensions drawn up to max_even|max_odd, small
// integer entries, every shape combination reachable.
inline std::vector<SuperMap> map_corpus(std::uint64_t seed, int count,
                                        int max_even, int max_odd) {
  Rng rng(seed);
  std::vector<SuperMap> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    SuperSpace dom = random_space(rng, max_even, max_odd);
    SuperSpace cod = random_space(rng, max_even, max_odd);
    int kind = rng.uniform(0, 5);
    if (kind == 0 && dom.dim.leq(cod.dim))
      out.push_back(random_mono(rng, dom, cod));
    else if (kind == 1 && cod.dim.leq(dom.dim))
      out.push_back(random_epi(rng, dom, cod));
    else if (kind == 2)
      out.push_back(SuperMap::zero(dom, cod));
    else
      out.push_back(random_map(rng, dom, cod));
  }
  return out;
}

}  // namespace schurvec
