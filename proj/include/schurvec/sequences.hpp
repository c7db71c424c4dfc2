#pragma once

#include "schurvec/partition.hpp"
#include "schurvec/schur.hpp"
#include "schurvec/supervec.hpp"

namespace schurvec {

// Both sides of the dimension inequality for a 0-sequence with mono i and
// epi p, plus the structural exactness fact they must mirror.
struct DimExactReport {
  SuperDim middle;        // dim of the middle object
  SuperDim ends_sum;      // dim of the outer objects, summed
  bool dim_exact = false;
  bool exact_at_middle = false;
};

// Checks dim(M) >= dim(M') + dim(M'') for M' >-> M ->> M'' composing to
// zero, and whether equality holds. Equality must coincide with exactness
// at M, computed structurally from the subspaces, and the coincidence is
// asserted rather than assumed.
inline DimExactReport is_dim_exact(const ZeroSequence& seq) {
  if (!is_mono(seq.i))
    throw precondition_error("is_dim_exact: the map i is not mono");
  if (!is_epi(seq.p))
    throw precondition_error("is_dim_exact: the map p is not epi");
  DimExactReport rep;
  rep.middle = seq.i.codomain.dim;
  rep.ends_sum = seq.i.domain.dim + seq.p.codomain.dim;
  if (!rep.ends_sum.leq(rep.middle))
    throw contract_violation("dimension inequality violated on a 0-sequence");
  rep.dim_exact = rep.middle == rep.ends_sum;

  // Structural route: im(i) sits inside ker(p) because the composite is
  // zero; exactness at M is their equality, decided by ranks of the spans.
  bool exact = true;
  for (int parity = 0; parity < 2; ++parity) {
    RatMat kp = kernel_basis(seq.p.block(parity));
    RatMat span = hcat(kp, seq.i.block(parity));
    if (rank(span) != kp.cols())
      throw contract_violation("image escapes the kernel despite p.i = 0");
    if (kp.cols() != rank(seq.i.block(parity))) exact = false;
  }
  rep.exact_at_middle = exact;
  if (rep.dim_exact != rep.exact_at_middle)
    throw contract_violation(
        "dimension equality and exactness at the middle disagree");
  return rep;
}

// For a dim-exact sequence, the induced map coker(i) -> M'' is mono and epi.
inline bool check_theorem_p2b(const ZeroSequence& seq) {
  DimExactReport rep = is_dim_exact(seq);
  if (!rep.dim_exact)
    throw precondition_error("check_theorem_p2b: sequence is not dim-exact");
  SuperMap q = cokernel(seq.i);
  // h . q = p has a unique solution because q is epi and kills im(i).
  RatMat blocks[2];
  for (int parity = 0; parity < 2; ++parity) {
    auto ht = solve_right(q.block(parity).transposed(),
                          seq.p.block(parity).transposed());
    if (!ht)
      throw contract_violation("p does not factor through the cokernel of i");
    blocks[parity] = ht->transposed();
  }
  SuperMap h(q.codomain, seq.p.codomain, std::move(blocks[0]),
             std::move(blocks[1]));
  if (!(compose(h, q) == seq.p))
    throw contract_violation("induced map fails h . q = p");
  return is_mono(h) && is_epi(h);
}

// For a sequence exact at M with p epi (no condition on i), the middle
// dimension is at most the sum of the outer ones.
inline bool check_p4_inequality(const ZeroSequence& seq) {
  if (!is_epi(seq.p))
    throw precondition_error("check_p4_inequality: the map p is not epi");
  for (int parity = 0; parity < 2; ++parity) {
    RatMat kp = kernel_basis(seq.p.block(parity));
    RatMat span = hcat(kp, seq.i.block(parity));
    if (rank(span) != kp.cols() ||
        kp.cols() != rank(seq.i.block(parity)))
      throw precondition_error(
          "check_p4_inequality: sequence is not exact at the middle");
  }
  return seq.i.codomain.dim.leq(seq.i.domain.dim + seq.p.codomain.dim);
}

// Tensor-product rule on graded dimensions.
inline SuperDim superdim_tensor(const SuperDim& a, const SuperDim& b) {
  return a.tensor_with(b);
}

// The value of a Schur functor on a direct sum decomposes with
// Littlewood-Richardson multiplicities; stated on graded dimensions:
// gd(lambda, V (+) W) = sum over mu, nu of lr(lambda, mu, nu) *
// gd(mu, V) (x) gd(nu, W).
inline bool check_schur_of_sum(const Partition& lambda, const SuperSpace& v,
                               const SuperSpace& w,
                               const Caps& caps = default_caps()) {
  SuperDim lhs = graded_dimension(lambda, (v.dim + w.dim));
  long long even = 0, odd = 0;
  for (const Partition& mu : subpartitions(lambda)) {
    for (const Partition& nu : partitions_of(lambda.size() - mu.size())) {
      long long c = lr_coefficient(lambda, mu, nu, caps);
      if (c == 0) continue;
      SuperDim term = superdim_tensor(graded_dimension(mu, v.dim),
                                      graded_dimension(nu, w.dim));
      even += c * term.even;
      odd += c * term.odd;
    }
  }
  return lhs == SuperDim{static_cast<int>(even), static_cast<int>(odd)};
}

}  // namespace schurvec
