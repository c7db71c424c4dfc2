#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schurvec/matrix.hpp"

namespace schurvec {

// Dimension pair of a Z/2-graded space, printed "m|n".
struct SuperDim {
  int even = 0;
  int odd = 0;

  int total() const { return even + odd; }
  bool is_zero() const { return even == 0 && odd == 0; }
  bool operator==(const SuperDim&) const = default;

  SuperDim operator+(const SuperDim& o) const {
    return {even + o.even, odd + o.odd};
  }
  // Dimension of a tensor product: parities multiply.
  SuperDim tensor_with(const SuperDim& o) const {
    return {even * o.even + odd * o.odd, even * o.odd + odd * o.even};
  }
  bool leq(const SuperDim& o) const { return even <= o.even && odd <= o.odd; }

  std::string to_string() const {
    return std::to_string(even) + "|" + std::to_string(odd);
  }
  static SuperDim parse(const std::string& s) {
    std::size_t bar = s.find('|');
    if (bar == std::string::npos || bar == 0 || bar + 1 == s.size())
      throw precondition_error("bad dimension literal: \"" + s + "\"");
    auto digits = [&](std::size_t from, std::size_t to) {
      for (std::size_t k = from; k < to; ++k)
        if (s[k] < '0' || s[k] > '9') return false;
      return true;
    };
    if (!digits(0, bar) || !digits(bar + 1, s.size()))
      throw precondition_error("bad dimension literal: \"" + s + "\"");
    long m = std::stol(s.substr(0, bar));
    long n = std::stol(s.substr(bar + 1));
    if (m > 1 << 20 || n > 1 << 20)
      throw precondition_error("dimension literal out of range: \"" + s + "\"");
    return {static_cast<int>(m), static_cast<int>(n)};
  }
};

// A finite dimensional super vector space with its standard homogeneous
// basis: even vectors first, then odd. Global basis index g has parity
// g >= dim.even.
struct SuperSpace {
  SuperDim dim;

  bool operator==(const SuperSpace&) const = default;
  int total() const { return dim.total(); }
  bool parity_of(int g) const { return g >= dim.even; }
  int offset_of(int g) const { return parity_of(g) ? g - dim.even : g; }
  int global_of(bool parity, int offset) const {
    return parity ? dim.even + offset : offset;
  }
};

inline SuperSpace make_space(int even, int odd) {
  if (even < 0 || odd < 0)
    throw precondition_error("space dimensions must be nonnegative");
  return SuperSpace{SuperDim{even, odd}};
}

inline SuperSpace unit_space() { return make_space(1, 0); }

// Grading-preserving linear map between standard-basis super spaces, stored
// as one block per parity, codomain rows by domain columns.
struct SuperMap {
  SuperSpace domain, codomain;
  RatMat even_block, odd_block;

  SuperMap() = default;
  SuperMap(SuperSpace dom, SuperSpace cod, RatMat even, RatMat odd)
      : domain(dom),
        codomain(cod),
        even_block(std::move(even)),
        odd_block(std::move(odd)) {
    if (even_block.rows() != codomain.dim.even ||
        even_block.cols() != domain.dim.even ||
        odd_block.rows() != codomain.dim.odd ||
        odd_block.cols() != domain.dim.odd)
      throw precondition_error("map blocks do not match the stated spaces");
  }

  bool operator==(const SuperMap&) const = default;

  static SuperMap zero(SuperSpace dom, SuperSpace cod) {
    return SuperMap(dom, cod, RatMat(cod.dim.even, dom.dim.even),
                    RatMat(cod.dim.odd, dom.dim.odd));
  }
  static SuperMap identity(SuperSpace v) {
    return SuperMap(v, v, RatMat::identity(v.dim.even),
                    RatMat::identity(v.dim.odd));
  }

  bool is_zero_map() const {
    return even_block.is_zero() && odd_block.is_zero();
  }

  const RatMat& block(bool parity) const {
    return parity ? odd_block : even_block;
  }
  RatMat& block(bool parity) { return parity ? odd_block : even_block; }

  // Entry in global indices; zero across parities by grading preservation.
  Rational entry(int row_global, int col_global) const {
    bool pr = codomain.parity_of(row_global);
    bool pc = domain.parity_of(col_global);
    if (pr != pc) return Rational(0);
    return block(pr)(codomain.offset_of(row_global),
                     domain.offset_of(col_global));
  }
  void set_entry(int row_global, int col_global, const Rational& v) {
    bool pr = codomain.parity_of(row_global);
    bool pc = domain.parity_of(col_global);
    if (pr != pc) {
      if (v != 0)
        throw precondition_error("grading-preserving map cannot mix parities");
      return;
    }
    block(pr)(codomain.offset_of(row_global), domain.offset_of(col_global)) =
        v;
  }
};

inline SuperMap compose(const SuperMap& g, const SuperMap& f) {
  if (!(f.codomain == g.domain))
    throw precondition_error("compose: codomain/domain mismatch");
  return SuperMap(f.domain, g.codomain, g.even_block * f.even_block,
                  g.odd_block * f.odd_block);
}

inline SuperMap add(const SuperMap& f, const SuperMap& g) {
  if (!(f.domain == g.domain && f.codomain == g.codomain))
    throw precondition_error("add: shape mismatch");
  return SuperMap(f.domain, f.codomain, f.even_block + g.even_block,
                  f.odd_block + g.odd_block);
}

inline SuperMap scale(const Rational& s, const SuperMap& f) {
  return SuperMap(f.domain, f.codomain, s * f.even_block, s * f.odd_block);
}

inline SuperSpace direct_sum(const SuperSpace& v, const SuperSpace& w) {
  return SuperSpace{v.dim + w.dim};
}

inline SuperMap direct_sum(const SuperMap& f, const SuperMap& g) {
  SuperSpace dom = direct_sum(f.domain, g.domain);
  SuperSpace cod = direct_sum(f.codomain, g.codomain);
  SuperMap h = SuperMap::zero(dom, cod);
  for (int parity = 0; parity < 2; ++parity) {
    const RatMat& a = f.block(parity);
    const RatMat& b = g.block(parity);
    RatMat& c = h.block(parity);
    for (int r = 0; r < a.rows(); ++r)
      for (int col = 0; col < a.cols(); ++col) c(r, col) = a(r, col);
    for (int r = 0; r < b.rows(); ++r)
      for (int col = 0; col < b.cols(); ++col)
        c(a.rows() + r, a.cols() + col) = b(r, col);
  }
  return h;
}

// Basis bookkeeping for a binary tensor product: pairs (a, b) of global
// indices in lexicographic order, stably partitioned even pairs first.
struct TensorBasis {
  SuperSpace left, right, space;
  std::vector<std::pair<int, int>> pairs;  // result global index -> (a, b)
  std::vector<std::vector<int>> index;     // (a, b) -> result global index
};

inline TensorBasis tensor_basis(const SuperSpace& v, const SuperSpace& w) {
  TensorBasis tb;
  tb.left = v;
  tb.right = w;
  std::vector<std::pair<int, int>> even, odd;
  for (int a = 0; a < v.total(); ++a)
    for (int b = 0; b < w.total(); ++b)
      (v.parity_of(a) ^ w.parity_of(b) ? odd : even).emplace_back(a, b);
  tb.space = make_space(static_cast<int>(even.size()),
                        static_cast<int>(odd.size()));
  if (!(tb.space.dim == v.dim.tensor_with(w.dim)))
    throw contract_violation("tensor basis dims disagree with dim formula");
  tb.pairs = std::move(even);
  tb.pairs.insert(tb.pairs.end(), odd.begin(), odd.end());
  tb.index.assign(v.total(), std::vector<int>(w.total(), -1));
  for (int g = 0; g < static_cast<int>(tb.pairs.size()); ++g)
    tb.index[tb.pairs[g].first][tb.pairs[g].second] = g;
  return tb;
}

inline SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
  return SuperSpace{v.dim.tensor_with(w.dim)};
}

// Tensor product of grading-preserving maps; no sign, since nothing is
// transposed past anything.
inline SuperMap tensor_map(const SuperMap& f, const SuperMap& g) {
  TensorBasis dom = tensor_basis(f.domain, g.domain);
  TensorBasis cod = tensor_basis(f.codomain, g.codomain);
  SuperMap h = SuperMap::zero(dom.space, cod.space);
  for (int c = 0; c < dom.space.total(); ++c) {
    auto [a, b] = dom.pairs[c];
    for (int r = 0; r < cod.space.total(); ++r) {
      auto [a2, b2] = cod.pairs[r];
      Rational v = f.entry(a2, a) * g.entry(b2, b);
      if (v != 0) h.set_entry(r, c, v);
    }
  }
  return h;
}

// Symmetry v (x) w -> w (x) v with the Koszul sign: -1 when both are odd.
inline SuperMap braiding(const SuperSpace& v, const SuperSpace& w) {
  TensorBasis from = tensor_basis(v, w);
  TensorBasis to = tensor_basis(w, v);
  SuperMap h = SuperMap::zero(from.space, to.space);
  for (int c = 0; c < from.space.total(); ++c) {
    auto [a, b] = from.pairs[c];
    bool sign = v.parity_of(a) && w.parity_of(b);
    h.set_entry(to.index[b][a], c, sign ? Rational(-1) : Rational(1));
  }
  return h;
}

// (a (x) b) (x) c -> a (x) (b (x) c), a permutation of the chosen bases.
inline SuperMap associator(const SuperSpace& a, const SuperSpace& b,
                           const SuperSpace& c) {
  TensorBasis ab = tensor_basis(a, b);
  TensorBasis bc = tensor_basis(b, c);
  TensorBasis from = tensor_basis(ab.space, c);
  TensorBasis to = tensor_basis(a, bc.space);
  SuperMap h = SuperMap::zero(from.space, to.space);
  for (int g = 0; g < from.space.total(); ++g) {
    auto [p, z] = from.pairs[g];
    auto [x, y] = ab.pairs[p];
    h.set_entry(to.index[x][bc.index[y][z]], g, Rational(1));
  }
  return h;
}

// 1 (x) v -> v. The chosen basis order makes this the identity matrix, but
// it is built from the pair table so the claim is checked, not assumed.
inline SuperMap left_unitor(const SuperSpace& v) {
  TensorBasis from = tensor_basis(unit_space(), v);
  SuperMap h = SuperMap::zero(from.space, v);
  for (int g = 0; g < from.space.total(); ++g)
    h.set_entry(from.pairs[g].second, g, Rational(1));
  return h;
}

inline SuperMap right_unitor(const SuperSpace& v) {
  TensorBasis from = tensor_basis(v, unit_space());
  SuperMap h = SuperMap::zero(from.space, v);
  for (int g = 0; g < from.space.total(); ++g)
    h.set_entry(from.pairs[g].first, g, Rational(1));
  return h;
}

inline SuperSpace dual(const SuperSpace& v) { return v; }

// Transpose on each block: the dual of a grading-preserving map, no signs.
inline SuperMap dual_transpose(const SuperMap& f) {
  return SuperMap(dual(f.codomain), dual(f.domain), f.even_block.transposed(),
                  f.odd_block.transposed());
}

// dual(v) (x) v -> 1, the sign-free pairing phi (x) x -> phi(x).
inline SuperMap evaluation(const SuperSpace& v) {
  TensorBasis from = tensor_basis(dual(v), v);
  SuperMap h = SuperMap::zero(from.space, unit_space());
  for (int g = 0; g < from.space.total(); ++g) {
    auto [a, b] = from.pairs[g];
    if (a == b) h.set_entry(0, g, Rational(1));
  }
  return h;
}

// 1 -> v (x) dual(v), sum of e_i (x) e^i over the homogeneous basis.
inline SuperMap coevaluation(const SuperSpace& v) {
  TensorBasis to = tensor_basis(v, dual(v));
  SuperMap h = SuperMap::zero(unit_space(), to.space);
  for (int i = 0; i < v.total(); ++i)
    h.set_entry(to.index[i][i], 0, Rational(1));
  return h;
}

// Trace with the sign of the grading: tr on the even block minus tr on the
// odd block.
inline Rational supertrace(const SuperMap& f) {
  if (!(f.domain == f.codomain))
    throw precondition_error("supertrace needs an endomorphism");
  Rational t = 0;
  for (int i = 0; i < f.even_block.rows(); ++i) t += f.even_block(i, i);
  for (int i = 0; i < f.odd_block.rows(); ++i) t -= f.odd_block(i, i);
  return t;
}

// The same trace computed as ev . braiding . (f (x) id) . coev, used as an
// independent route in tests.
inline Rational categorical_supertrace(const SuperMap& f) {
  if (!(f.domain == f.codomain))
    throw precondition_error("supertrace needs an endomorphism");
  const SuperSpace& v = f.domain;
  SuperMap z = compose(
      evaluation(v),
      compose(braiding(v, dual(v)),
              compose(tensor_map(f, SuperMap::identity(dual(v))),
                      coevaluation(v))));
  return z.even_block(0, 0);
}

// The name of f : m -> n, as the composite 1 -> m (x) m* -> m* (x) m
// -> m* (x) n. Linear and injective in f.
inline SuperMap name_of(const SuperMap& f) {
  const SuperSpace& m = f.domain;
  return compose(tensor_map(SuperMap::identity(dual(m)), f),
                 compose(braiding(m, dual(m)), coevaluation(m)));
}

inline SuperDim rank_dims(const SuperMap& f) {
  return SuperDim{rank(f.even_block), rank(f.odd_block)};
}

inline bool is_mono(const SuperMap& f) {
  return rank_dims(f) == f.domain.dim;
}

inline bool is_epi(const SuperMap& f) {
  return rank_dims(f) == f.codomain.dim;
}

inline bool is_iso(const SuperMap& f) { return is_mono(f) && is_epi(f); }

// Kernel inclusion ker(f) -> domain, canonical echelon basis per parity.
inline SuperMap kernel(const SuperMap& f) {
  RatMat ke = kernel_basis(f.even_block);
  RatMat ko = kernel_basis(f.odd_block);
  SuperSpace k = make_space(ke.cols(), ko.cols());
  return SuperMap(k, f.domain, std::move(ke), std::move(ko));
}

// Cokernel projection codomain -> coker(f): rows span the left kernel.
inline SuperMap cokernel(const SuperMap& f) {
  RatMat qe = kernel_basis(f.even_block.transposed()).transposed();
  RatMat qo = kernel_basis(f.odd_block.transposed()).transposed();
  SuperSpace c = make_space(qe.rows(), qo.rows());
  return SuperMap(f.codomain, c, std::move(qe), std::move(qo));
}

// Image factorization f = incl . surj with incl mono and surj epi.
struct ImageFactorization {
  SuperSpace image;
  SuperMap incl;  // image -> codomain
  SuperMap surj;  // domain -> image
};

inline ImageFactorization image(const SuperMap& f) {
  RatMat be = column_space_basis(f.even_block);
  RatMat bo = column_space_basis(f.odd_block);
  auto se = solve_right(be, f.even_block);
  auto so = solve_right(bo, f.odd_block);
  if (!se || !so)
    throw contract_violation("image columns failed to express the map");
  SuperSpace im = make_space(be.cols(), bo.cols());
  ImageFactorization out{im, SuperMap(im, f.codomain, std::move(be),
                                      std::move(bo)),
                         SuperMap(f.domain, im, std::move(*se),
                                  std::move(*so))};
  if (!(compose(out.incl, out.surj) == f))
    throw contract_violation("image factorization does not recompose");
  return out;
}

// An object is tensor-invertible exactly when its evaluation is an
// isomorphism.
inline bool is_invertible(const SuperSpace& v) {
  return is_iso(evaluation(v));
}

// Composable pair with p . i = 0, the raw material of exactness checks.
struct ZeroSequence {
  SuperMap i;  // m' -> m
  SuperMap p;  // m -> m''

  ZeroSequence(SuperMap i_, SuperMap p_) : i(std::move(i_)), p(std::move(p_)) {
    if (!(i.codomain == p.domain))
      throw precondition_error("sequence maps are not composable");
    if (!compose(p, i).is_zero_map())
      throw precondition_error("sequence does not compose to zero");
  }
};

}  // namespace schurvec
