#pragma once

#include <map>
#include <vector>

#include "schurvec/tensor_power.hpp"

namespace schurvec {

// Realization of a Schur functor value S_lambda(v) as a direct summand of
// the |lambda|-th tensor power: project . embed = id on `space`, and
// embed . project is the Young idempotent's action on the power.
struct SchurObject {
  Partition lambda;
  SuperSpace factor;   // v
  SuperSpace ambient;  // v^(x)n
  SuperSpace space;    // realized S_lambda(v)
  SuperMap embed;      // space -> ambient
  SuperMap project;    // ambient -> space
};

// Cuts the image of the Young idempotent out of the tensor power. The place
// permutation action preserves the multiset of letters of a word, so the
// idempotent is block diagonal over letter multisets; each block is
// idempotent and small, and its pivot columns give the summand basis.
inline SchurObject schur_apply_space(const Partition& lambda,
                                     const SuperSpace& v,
                                     const Caps& caps = default_caps()) {
  if (v.total() > caps.max_space_total_dim)
    throw cap_error("schur_apply_space: total dimension " +
                    std::to_string(v.total()) + " exceeds cap " +
                    std::to_string(caps.max_space_total_dim));
  int n = lambda.size();
  PowerBasis pb = make_power_basis(v, n, caps);
  if (n == 0) {
    SuperMap id = SuperMap::identity(unit_space());
    return SchurObject{lambda, v, pb.space, unit_space(), id, id};
  }
  GroupAlgebraElement e = young_symmetrizer(lambda, caps);

  long long total = pb.global_of_rank.size();
  std::map<std::vector<int>, std::vector<long long>> orbits;
  for (long long r = 0; r < total; ++r) {
    std::vector<int> key = pb.word_of_rank(r);
    std::sort(key.begin(), key.end());
    orbits[key].push_back(r);  // ranks ascending within each orbit
  }
  std::vector<int> pos_in_orbit(total);
  for (const auto& [key, members] : orbits)
    for (std::size_t i = 0; i < members.size(); ++i)
      pos_in_orbit[members[i]] = static_cast<int>(i);

  // Realized basis: orbits in key order, pivots in column order. All words
  // of an orbit share one parity.
  RatMat embed_blocks[2] = {RatMat(pb.space.dim.even, 0),
                            RatMat(pb.space.dim.odd, 0)};
  std::vector<std::vector<Rational>> project_rows[2];

  for (const auto& [key, members] : orbits) {
    int s = static_cast<int>(members.size());
    bool parity = pb.parity_of_rank[members[0]];
    RatMat a(s, s);
    for (int c = 0; c < s; ++c)
      for (const auto& [sigma, coeff] : e.terms) {
        MovedWord mw = apply_perm_to_word(sigma, members[c], pb);
        a(pos_in_orbit[mw.rank], c) += Rational(mw.sign) * coeff;
      }
    Rref red = rref(a);
    int r = static_cast<int>(red.pivot_cols.size());
    if (r == 0) continue;
    RatMat b = a.columns(red.pivot_cols);
    // red.mat's nonzero rows R satisfy a = b . R; idempotence forces
    // R . b = identity, which certifies the whole block construction.
    RatMat check(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rational x = 0;
        for (int k = 0; k < s; ++k) x += red.mat(i, k) * b(k, j);
        check(i, j) = x;
      }
    if (!(check == RatMat::identity(r)))
      throw contract_violation("orbit block of the Young idempotent failed "
                               "the idempotence certificate");

    RatMat& eb = embed_blocks[parity];
    RatMat grown(eb.rows(), eb.cols() + r);
    for (int i = 0; i < eb.rows(); ++i)
      for (int j = 0; j < eb.cols(); ++j) grown(i, j) = eb(i, j);
    for (int i = 0; i < s; ++i) {
      int off = pb.space.offset_of(pb.global_of_rank[members[i]]);
      for (int j = 0; j < r; ++j) grown(off, eb.cols() + j) = b(i, j);
    }
    eb = std::move(grown);
    for (int j = 0; j < r; ++j) {
      std::vector<Rational> row(parity ? pb.space.dim.odd
                                       : pb.space.dim.even);
      for (int i = 0; i < s; ++i)
        row[pb.space.offset_of(pb.global_of_rank[members[i]])] =
            red.mat(j, i);
      project_rows[parity].push_back(std::move(row));
    }
  }

  SuperSpace realized = make_space(embed_blocks[0].cols(),
                                   embed_blocks[1].cols());
  RatMat proj_blocks[2] = {
      RatMat(realized.dim.even, pb.space.dim.even),
      RatMat(realized.dim.odd, pb.space.dim.odd)};
  for (int parity = 0; parity < 2; ++parity)
    for (std::size_t i = 0; i < project_rows[parity].size(); ++i)
      for (std::size_t j = 0; j < project_rows[parity][i].size(); ++j)
        proj_blocks[parity](static_cast<int>(i), static_cast<int>(j)) =
            project_rows[parity][i][j];

  SchurObject out{lambda, v, pb.space, realized,
                  SuperMap(realized, pb.space, std::move(embed_blocks[0]),
                           std::move(embed_blocks[1])),
                  SuperMap(pb.space, realized, std::move(proj_blocks[0]),
                           std::move(proj_blocks[1]))};
  if (!(compose(out.project, out.embed) == SuperMap::identity(realized)))
    throw contract_violation("schur summand retraction failed");
  return out;
}

// S_lambda(f) on the realized summands of domain and codomain.
inline SuperMap schur_apply_map(const Partition& lambda, const SuperMap& f,
                                const Caps& caps = default_caps()) {
  SchurObject s = schur_apply_space(lambda, f.domain, caps);
  SchurObject t = schur_apply_space(lambda, f.codomain, caps);
  SuperMap power = tensor_power_map(f, lambda.size(), caps);
  return compose(t.project, compose(power, s.embed));
}

// Graded dimension of S_lambda of an m|n-dimensional space, by counting
// hook semistandard tableaux: pairs of a column-strict tableau on mu with m
// letters and a row-strict filling of lambda/mu with n letters, where
// mu runs over subshapes of lambda; the parity of a pair is |lambda| - |mu|
// mod 2. Row-strict fillings of lambda/mu are column-strict fillings of the
// conjugate skew shape.
inline SuperDim graded_dimension(const Partition& lambda, const SuperDim& d) {
  if (lambda.size() > 20)
    throw cap_error("graded_dimension: |lambda| = " +
                    std::to_string(lambda.size()) + " exceeds cap 20");
  Partition lc = conjugate(lambda);
  long long even = 0, odd = 0;
  for (const Partition& mu : subpartitions(lambda)) {
    if (mu.rows() > d.even) continue;
    long long a = count_ssyt(mu, d.even);
    if (a == 0) continue;
    long long b = count_ssyt_skew(lc, conjugate(mu), d.odd);
    if (b == 0) continue;
    if ((lambda.size() - mu.size()) % 2 == 0)
      even += a * b;
    else
      odd += a * b;
  }
  if (even > (1 << 30) || odd > (1 << 30))
    throw cap_error("graded_dimension overflow guard");
  return SuperDim{static_cast<int>(even), static_cast<int>(odd)};
}

}  // namespace schurvec
