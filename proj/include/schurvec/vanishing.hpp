#pragma once

#include <functional>
#include <vector>

#include "schurvec/schur.hpp"

namespace schurvec {

// The partitions lambda with S_lambda(V) = 0, up to a size bound. Closed
// upward under diagram inclusion, which every construction re-asserts.
struct VanishingSet {
  int bound = 0;
  SuperDim source_dim;
  std::vector<Partition> members;  // in partitions_up_to order

  bool contains_partition(const Partition& p) const {
    for (const auto& m : members)
      if (m == p) return true;
    return false;
  }
};

namespace detail {

inline void assert_upward_closed(const VanishingSet& vs,
                                 const std::vector<Partition>& all) {
  for (const auto& small : vs.members)
    for (const auto& big : all)
      if (contains(big, small) && !vs.contains_partition(big))
        throw contract_violation(
            "vanishing set is not upward closed: " + small.to_string() +
            " vanishes but " + big.to_string() + " does not");
}

}  // namespace detail

// Brute-force vanishing set: realize each summand and read off its
// dimension. Subject to the brute-force caps.
inline VanishingSet vanishing_set(const SuperSpace& v, int bound,
                                  const Caps& caps = default_caps()) {
  VanishingSet vs;
  vs.bound = bound;
  vs.source_dim = v.dim;
  auto all = partitions_up_to(bound, caps);
  for (const auto& lambda : all)
    if (schur_apply_space(lambda, v, caps).space.dim.is_zero())
      vs.members.push_back(lambda);
  detail::assert_upward_closed(vs, all);
  return vs;
}

// The same set computed from the counting oracle instead of the idempotent.
inline VanishingSet vanishing_set_by_dimension(const SuperDim& d, int bound,
                                               const Caps& caps =
                                                   default_caps()) {
  VanishingSet vs;
  vs.bound = bound;
  vs.source_dim = d;
  auto all = partitions_up_to(bound, caps);
  for (const auto& lambda : all)
    if (graded_dimension(lambda, d).is_zero()) vs.members.push_back(lambda);
  detail::assert_upward_closed(vs, all);
  return vs;
}

// The unique minimal vanishing partition of an m|n-dimensional space: the
// full rectangle with m+1 rows and n+1 columns. Verified on every call:
// the oracle kills the rectangle and keeps every proper subshape alive.
inline Partition minimal_vanishing_partition(const SuperDim& d) {
  Partition rect = rectangle(d.even + 1, d.odd + 1);
  if (!graded_dimension(rect, d).is_zero())
    throw contract_violation("minimal vanishing rectangle fails to vanish");
  for (const Partition& mu : subpartitions(rect)) {
    if (mu == rect) continue;
    if (graded_dimension(mu, d).is_zero())
      throw contract_violation("subshape " + mu.to_string() +
                               " of the minimal rectangle already vanishes");
  }
  return rect;
}

// Recovers m|n from vanishing answers alone: the minimal vanishing
// rectangle has sides m+1 and n+1. `vanishes` answers whether S_lambda of
// the unknown space is zero; only rectangles up to `bound` cells are
// queried. Throws cap_error when the bound cannot contain the witness
// rectangle, contract_violation when the answers are not monotone.
inline SuperDim superdim_from_vanishing(
    const std::function<bool(const Partition&)>& vanishes, int bound) {
  // Scan rectangles by area; the first vanishing one with both neighbors
  // alive pins the dimensions.
  std::vector<std::pair<int, int>> found;  // vanishing rectangles (rows, cols)
  for (int rows = 1; rows <= bound; ++rows)
    for (int cols = 1; rows * cols <= bound; ++cols)
      if (vanishes(rectangle(rows, cols))) found.emplace_back(rows, cols);
  // Keep the minimal ones under componentwise order.
  std::vector<std::pair<int, int>> minimal;
  for (auto [r, c] : found) {
    bool is_min = true;
    for (auto [r2, c2] : found)
      if ((r2 < r && c2 <= c) || (r2 <= r && c2 < c)) is_min = false;
    if (is_min) minimal.emplace_back(r, c);
  }
  if (minimal.empty())
    throw cap_error("superdim_from_vanishing: no vanishing rectangle within "
                    "bound " + std::to_string(bound));
  if (minimal.size() > 1)
    throw contract_violation(
        "superdim_from_vanishing: vanishing rectangles have no unique "
        "minimum; the oracle is not a Schur vanishing oracle");
  auto [rows, cols] = minimal[0];
  // Monotonicity spot check: everything containing the minimum vanishes.
  for (int r = rows; r <= bound; ++r)
    for (int c = cols; r * c <= bound; ++c)
      if (!vanishes(rectangle(r, c)))
        throw contract_violation(
            "superdim_from_vanishing: answers are not upward closed");
  return SuperDim{rows - 1, cols - 1};
}

}  // namespace schurvec
