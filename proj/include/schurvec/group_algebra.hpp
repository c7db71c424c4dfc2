#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "schurvec/partition.hpp"
#include "schurvec/rational.hpp"

namespace schurvec {

// Permutation of {0..n-1}. img(k) is where position k is sent.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw precondition_error("not a permutation");
      seen[v] = 1;
    }
  }
  static Perm identity(int n) {
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k;
    return Perm(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k]; }

  // (this . first)(k) = this(first(k)): first acts first.
  Perm after(const Perm& first) const {
    if (degree() != first.degree())
      throw precondition_error("permutation degrees differ");
    std::vector<int> img(degree());
    for (int k = 0; k < degree(); ++k) img[k] = img_[first.img_[k]];
    Perm p;
    p.img_ = std::move(img);  // composition of bijections, skip revalidation
    return p;
  }

  Perm inverse() const {
    std::vector<int> img(degree());
    for (int k = 0; k < degree(); ++k) img[img_[k]] = k;
    Perm p;
    p.img_ = std::move(img);
    return p;
  }

  int sign() const {
    int inv = 0;
    for (int k = 0; k < degree(); ++k)
      for (int l = k + 1; l < degree(); ++l)
        if (img_[k] > img_[l]) ++inv;
    return inv % 2 ? -1 : 1;
  }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// Element of the rational group algebra of S_n, sparse over a sorted map so
// iteration order is deterministic. Zero coefficients are never stored.
struct GroupAlgebraElement {
  int degree = 0;
  std::map<Perm, Rational> terms;

  static GroupAlgebraElement zero(int n) { return {n, {}}; }
  static GroupAlgebraElement unit(int n) {
    GroupAlgebraElement e{n, {}};
    e.terms[Perm::identity(n)] = 1;
    return e;
  }

  bool operator==(const GroupAlgebraElement&) const = default;

  void add_term(const Perm& p, const Rational& c) {
    auto it = terms.find(p);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(p, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
};

inline GroupAlgebraElement add(const GroupAlgebraElement& a,
                               const GroupAlgebraElement& b) {
  if (a.degree != b.degree)
    throw precondition_error("group algebra degrees differ");
  GroupAlgebraElement c = a;
  for (const auto& [p, coeff] : b.terms) c.add_term(p, coeff);
  return c;
}

inline GroupAlgebraElement scale(const Rational& s,
                                 const GroupAlgebraElement& a) {
  GroupAlgebraElement c{a.degree, {}};
  if (s == 0) return c;
  for (const auto& [p, coeff] : a.terms) c.terms.emplace(p, s * coeff);
  return c;
}

// Convolution product: (a * b) = sum a_s b_t (s . t), t acting first.
inline GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  if (a.degree != b.degree)
    throw precondition_error("group algebra degrees differ");
  GroupAlgebraElement c{a.degree, {}};
  for (const auto& [s, ca] : a.terms)
    for (const auto& [t, cb] : b.terms) c.add_term(s.after(t), ca * cb);
  return c;
}

// Canonical tableau of shape lambda: 0-based entries filled along rows.
inline std::vector<std::vector<int>> row_reading_tableau(
    const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.rows());
  int next = 0;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) rows[i].push_back(next++);
  return rows;
}

namespace detail {

// All permutations of {0..n-1} preserving each group setwise; sum with
// coefficient 1, or with the sign when signed.
inline GroupAlgebraElement group_sum(int n,
                                     const std::vector<std::vector<int>>& groups,
                                     bool signed_sum) {
  std::vector<Perm> perms{Perm::identity(n)};
  for (const auto& g : groups) {
    std::vector<int> arrangement = g;
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<int> base = arrangement;
    std::vector<Perm> next;
    do {
      for (const Perm& p : perms) {
        std::vector<int> img(n);
        for (int k = 0; k < n; ++k) img[k] = p(k);
        for (std::size_t k = 0; k < base.size(); ++k)
          img[base[k]] = p(arrangement[k]);
        next.emplace_back(std::move(img));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    perms = std::move(next);
  }
  GroupAlgebraElement out{n, {}};
  for (const Perm& p : perms)
    out.add_term(p, signed_sum ? Rational(p.sign()) : Rational(1));
  return out;
}

}  // namespace detail

inline GroupAlgebraElement row_symmetrizer(const Partition& lambda) {
  return detail::group_sum(lambda.size(), row_reading_tableau(lambda), false);
}

inline GroupAlgebraElement column_antisymmetrizer(const Partition& lambda) {
  auto rows = row_reading_tableau(lambda);
  std::vector<std::vector<int>> cols(lambda.part(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      cols[j].push_back(rows[i][j]);
  return detail::group_sum(lambda.size(), cols, true);
}

// Young idempotent for the row-reading tableau of lambda:
// (f_lambda / n!) . rowsym . colsign. Squares to itself.
inline GroupAlgebraElement young_symmetrizer(const Partition& lambda,
                                             const Caps& caps = default_caps()) {
  int n = lambda.size();
  if (n < 1) throw precondition_error("young_symmetrizer needs |lambda| >= 1");
  if (n > caps.max_degree)
    throw cap_error("young_symmetrizer: degree " + std::to_string(n) +
                    " exceeds cap " + std::to_string(caps.max_degree));
  GroupAlgebraElement c =
      multiply(row_symmetrizer(lambda), column_antisymmetrizer(lambda));
  Rational s(count_standard_tableaux(lambda), factorial(n));
  return scale(s, c);
}

}  // namespace schurvec
