#pragma once

#include <vector>

#include "schurvec/group_algebra.hpp"
#include "schurvec/supervec.hpp"

namespace schurvec {

// Basis bookkeeping for the n-fold tensor power of one space: words over the
// factor's global basis in lexicographic order, stably partitioned even
// words first. For n = 0 the power is the unit with the empty word.
struct PowerBasis {
  SuperSpace factor;
  int n = 0;
  SuperSpace space;
  std::vector<int> global_of_rank;  // lex rank -> power global index
  std::vector<int> rank_of_global;  // power global index -> lex rank
  std::vector<bool> parity_of_rank;

  int t() const { return factor.total(); }

  std::vector<int> word_of_rank(long long rank) const {
    std::vector<int> w(n);
    for (int k = n - 1; k >= 0; --k) {
      w[k] = static_cast<int>(rank % t());
      rank /= t();
    }
    return w;
  }
  long long rank_of_word(const std::vector<int>& w) const {
    long long r = 0;
    for (int k = 0; k < n; ++k) r = r * t() + w[k];
    return r;
  }
  bool letter_parity(int letter) const { return factor.parity_of(letter); }
};

inline PowerBasis make_power_basis(const SuperSpace& v, int n,
                                   const Caps& caps = default_caps()) {
  if (n < 0) throw precondition_error("tensor power needs n >= 0");
  PowerBasis pb;
  pb.factor = v;
  pb.n = n;
  long long total = 1;
  for (int k = 0; k < n; ++k) {
    total *= v.total();
    if (total > (1 << 17))
      throw cap_error("tensor power basis too large: " +
                      std::to_string(v.total()) + "^" + std::to_string(n));
  }
  pb.parity_of_rank.resize(total);
  int odd_count = 0;
  for (long long r = 0; r < total; ++r) {
    int odd_letters = 0;
    long long x = r;
    for (int k = 0; k < n; ++k) {
      if (v.parity_of(static_cast<int>(x % v.total()))) ++odd_letters;
      x /= v.total();
    }
    pb.parity_of_rank[r] = odd_letters % 2;
    odd_count += odd_letters % 2;
  }
  pb.space = make_space(static_cast<int>(total) - odd_count, odd_count);
  pb.global_of_rank.resize(total);
  pb.rank_of_global.resize(total);
  int even_at = 0, odd_at = pb.space.dim.even;
  for (long long r = 0; r < total; ++r) {
    int g = pb.parity_of_rank[r] ? odd_at++ : even_at++;
    pb.global_of_rank[r] = g;
    pb.rank_of_global[g] = static_cast<int>(r);
  }
  return pb;
}

// Sign of letting sigma permute the factors of the word w: -1 per crossing
// of two odd letters. Positions k < l cross exactly when sigma(k) > sigma(l).
inline int koszul_sign(const Perm& sigma, const std::vector<int>& w,
                       const PowerBasis& pb) {
  int crossings = 0;
  for (int k = 0; k < pb.n; ++k) {
    if (!pb.letter_parity(w[k])) continue;
    for (int l = k + 1; l < pb.n; ++l)
      if (pb.letter_parity(w[l]) && sigma(k) > sigma(l)) ++crossings;
  }
  return crossings % 2 ? -1 : 1;
}

// Image data of sigma acting on the basis word of `rank`: the word with
// letter k moved to slot sigma(k), and the Koszul sign picked up on the way.
struct MovedWord {
  long long rank;
  int sign;
};

inline MovedWord apply_perm_to_word(const Perm& sigma, long long rank,
                                    const PowerBasis& pb) {
  std::vector<int> w = pb.word_of_rank(rank);
  std::vector<int> out(pb.n);
  for (int k = 0; k < pb.n; ++k) out[sigma(k)] = w[k];
  return MovedWord{pb.rank_of_word(out), koszul_sign(sigma, w, pb)};
}

// Dense matrix of the signed place permutation on the n-th power of v.
// Intended for small powers; refuses sizes past the entry cap.
inline SuperMap permutation_action(const Perm& sigma, const SuperSpace& v,
                                   int n, const Caps& caps = default_caps()) {
  if (sigma.degree() != n)
    throw precondition_error("permutation degree must match the power");
  PowerBasis pb = make_power_basis(v, n, caps);
  long long total = pb.global_of_rank.size();
  if (total * total > caps.max_power_matrix_entries)
    throw cap_error("permutation_action: dense matrix would have " +
                    std::to_string(total * total) + " entries");
  SuperMap h = SuperMap::zero(pb.space, pb.space);
  for (long long r = 0; r < total; ++r) {
    MovedWord mw = apply_perm_to_word(sigma, r, pb);
    h.set_entry(pb.global_of_rank[mw.rank], pb.global_of_rank[r],
                Rational(mw.sign));
  }
  return h;
}

// Dense matrix of a group algebra element acting on the n-th power of v.
inline SuperMap group_algebra_action(const GroupAlgebraElement& x,
                                     const SuperSpace& v, int n,
                                     const Caps& caps = default_caps()) {
  if (x.degree != n)
    throw precondition_error("group algebra degree must match the power");
  PowerBasis pb = make_power_basis(v, n, caps);
  long long total = pb.global_of_rank.size();
  if (total * total > caps.max_power_matrix_entries)
    throw cap_error("group_algebra_action: dense matrix would have " +
                    std::to_string(total * total) + " entries");
  SuperMap h = SuperMap::zero(pb.space, pb.space);
  for (const auto& [sigma, coeff] : x.terms)
    for (long long r = 0; r < total; ++r) {
      MovedWord mw = apply_perm_to_word(sigma, r, pb);
      int row = pb.global_of_rank[mw.rank];
      int col = pb.global_of_rank[r];
      h.set_entry(row, col, h.entry(row, col) + Rational(mw.sign) * coeff);
    }
  return h;
}

// f^(x)n on the chosen power bases of domain and codomain.
inline SuperMap tensor_power_map(const SuperMap& f, int n,
                                 const Caps& caps = default_caps()) {
  PowerBasis dom = make_power_basis(f.domain, n, caps);
  PowerBasis cod = make_power_basis(f.codomain, n, caps);
  long long dt = dom.global_of_rank.size();
  long long ct = cod.global_of_rank.size();
  if (dt * ct > caps.max_power_matrix_entries)
    throw cap_error("tensor_power_map: dense matrix would have " +
                    std::to_string(dt * ct) + " entries");
  SuperMap h = SuperMap::zero(dom.space, cod.space);
  for (long long c = 0; c < dt; ++c) {
    std::vector<int> w = dom.word_of_rank(c);
    for (long long r = 0; r < ct; ++r) {
      if (cod.parity_of_rank[r] != dom.parity_of_rank[c]) continue;
      std::vector<int> u = cod.word_of_rank(r);
      Rational prod = 1;
      for (int k = 0; k < n && prod != 0; ++k) prod *= f.entry(u[k], w[k]);
      if (prod != 0)
        h.set_entry(cod.global_of_rank[r], dom.global_of_rank[c], prod);
    }
  }
  return h;
}

}  // namespace schurvec
