#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "schurvec/caps.hpp"
#include "schurvec/rational.hpp"

namespace schurvec {

// Integer partition: weakly decreasing positive parts. The empty partition
// is allowed and prints as "-".
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0)
        throw precondition_error("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw precondition_error("partition parts must be weakly decreasing");
    }
  }

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int rows() const { return static_cast<int>(parts.size()); }
  // Row lengths continue with 0 past the last row, which simplifies cellwise
  // comparisons.
  int part(int i) const {
    return (i >= 0 && i < rows()) ? parts[i] : 0;
  }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const {
    if (parts.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s;
  }

  static Partition parse(const std::string& s) {
    if (s == "-") return Partition{};
    if (s.empty()) throw precondition_error("empty partition literal");
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      if (j == i || (j < s.size() && s[j] != ','))
        throw precondition_error("bad partition literal: \"" + s + "\"");
      long v = std::stol(s.substr(i, j - i));
      if (v <= 0 || v > 1000000)
        throw precondition_error("bad partition part in \"" + s + "\"");
      parts.push_back(static_cast<int>(v));
      i = (j < s.size()) ? j + 1 : j;
      if (j < s.size() && j + 1 == s.size())
        throw precondition_error("trailing comma in \"" + s + "\"");
    }
    return Partition(std::move(parts));
  }
};

// True iff the diagram of mu fits inside the diagram of lambda.
inline bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.rows() > lambda.rows()) return false;
  for (int i = 0; i < mu.rows(); ++i)
    if (mu.parts[i] > lambda.parts[i]) return false;
  return true;
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 0; j < lambda.part(0); ++j) {
    int col = 0;
    for (int i = 0; i < lambda.rows(); ++i)
      if (lambda.parts[i] > j) ++col;
    parts.push_back(col);
  }
  return Partition(std::move(parts));
}

inline Partition rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0)
    throw precondition_error("rectangle needs nonnegative sides");
  if (rows == 0 || cols == 0) return Partition{};
  return Partition(std::vector<int>(rows, cols));
}

namespace detail {
inline void partitions_of_rec(int remaining, int max_part,
                              std::vector<int>& acc,
                              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_of_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions of exactly n, largest first part first: (3), (2,1), (1,1,1).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw precondition_error("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::partitions_of_rec(n, n, acc, out);
  return out;
}

// All nonempty partitions of size 1..bound, sizes ascending.
inline std::vector<Partition> partitions_up_to(
    int bound, const Caps& caps = default_caps()) {
  if (bound < 1) throw precondition_error("partitions_up_to needs bound >= 1");
  if (bound > caps.max_partition_bound)
    throw cap_error("partitions_up_to: bound " + std::to_string(bound) +
                    " exceeds cap " + std::to_string(caps.max_partition_bound));
  std::vector<Partition> out;
  for (int n = 1; n <= bound; ++n) {
    auto layer = partitions_of(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Hook length of cell (i, j), 0-based, of the diagram of lambda.
inline int hook_length(const Partition& lambda, int i, int j) {
  Partition c = conjugate(lambda);
  return lambda.part(i) - j + c.part(j) - i - 1;
}

// Number of standard fillings, by the hook length formula.
inline long long count_standard_tableaux(const Partition& lambda) {
  int n = lambda.size();
  if (n == 0) return 1;
  if (n > 20)
    throw cap_error("count_standard_tableaux: partition size " +
                    std::to_string(n) + " exceeds cap 20");
  Integer num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  Integer den = 1;
  Partition c = conjugate(lambda);
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j)
      den *= lambda.parts[i] - j + c.parts[j] - i - 1;
  if (num % den != 0)
    throw contract_violation("hook length formula gave a non-integer");
  return static_cast<long long>(num / den);
}

// Number of column-strict (semistandard) fillings of lambda with letters
// 1..m, by the hook content formula.
inline long long count_ssyt(const Partition& lambda, int m) {
  if (m < 0) throw precondition_error("count_ssyt needs m >= 0");
  if (lambda.rows() > m) return 0;
  Rational prod = 1;
  Partition c = conjugate(lambda);
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) {
      int hook = lambda.parts[i] - j + c.parts[j] - i - 1;
      prod *= Rational(m + j - i, hook);
    }
  if (denominator(prod) != 1)
    throw contract_violation("hook content formula gave a non-integer");
  Integer v = numerator(prod);
  return static_cast<long long>(v);
}

namespace detail {

struct SkewCell {
  int row, col;
};

inline std::vector<SkewCell> skew_cells(const Partition& outer,
                                        const Partition& inner) {
  if (!contains(outer, inner))
    throw precondition_error("skew shape needs inner inside outer");
  std::vector<SkewCell> cells;
  for (int i = 0; i < outer.rows(); ++i)
    for (int j = inner.part(i); j < outer.parts[i]; ++j)
      cells.push_back({i, j});
  return cells;
}

// Counts semistandard fillings of outer/inner with letters 1..m, backtracking
// cell by cell in row-major order. `content` restricts letter multiplicities
// when nonempty, and `lattice` additionally requires the reverse reading word
// to be a lattice word (checked on completion; shapes here are tiny).
inline long long count_skew_fillings(const Partition& outer,
                                     const Partition& inner, int m,
                                     const std::vector<int>* content,
                                     bool lattice) {
  auto cells = skew_cells(outer, inner);
  int n = static_cast<int>(cells.size());
  std::vector<int> fill(n, 0);
  std::vector<int> used(m + 1, 0);
  // grid[i][j] = value at (i, j) or 0 when unfilled / outside the skew shape.
  std::vector<std::vector<int>> grid(outer.rows(),
                                     std::vector<int>(outer.part(0), 0));
  long long count = 0;

  auto lattice_ok = [&]() {
    std::vector<int> seen(m + 2, 0);
    for (int i = 0; i < outer.rows(); ++i)
      for (int j = outer.parts[i] - 1; j >= inner.part(i); --j) {
        int v = grid[i][j];
        ++seen[v];
        if (v > 1 && seen[v] > seen[v - 1]) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (!lattice || lattice_ok()) ++count;
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1, hi = m;
    if (j > inner.part(i) && grid[i][j - 1] > lo) lo = grid[i][j - 1];
    if (i > 0 && j < outer.part(i - 1) && j >= inner.part(i - 1) &&
        grid[i - 1][j] >= lo)
      lo = grid[i - 1][j] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (content && used[v] >= (*content)[v - 1]) continue;
      grid[i][j] = v;
      ++used[v];
      self(self, k + 1);
      --used[v];
      grid[i][j] = 0;
    }
  };
  if (content) {
    int total = 0;
    for (int c : *content) total += c;
    if (total != n) return 0;
  }
  rec(rec, 0);
  return count;
}

}  // namespace detail

// Semistandard fillings of the skew shape outer/inner with letters 1..m,
// counted by enumeration.
inline long long count_ssyt_skew(const Partition& outer, const Partition& inner,
                                 int m) {
  if (m < 0) throw precondition_error("count_ssyt_skew needs m >= 0");
  if (outer == inner) return 1;
  if (m == 0) return 0;
  return detail::count_skew_fillings(outer, inner, m, nullptr, false);
}

// Littlewood-Richardson coefficient: semistandard fillings of lambda/mu with
// content nu whose reverse reading word is a lattice word.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu,
                                const Caps& caps = default_caps()) {
  if (lambda.size() > caps.max_lr_size)
    throw cap_error("lr_coefficient: |lambda| = " +
                    std::to_string(lambda.size()) + " exceeds cap " +
                    std::to_string(caps.max_lr_size));
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!contains(lambda, mu)) return 0;
  if (lambda == mu) return 1;  // nu is empty here
  if (nu.empty()) return 0;
  return detail::count_skew_fillings(lambda, mu, nu.rows(), &nu.parts, true);
}

// Every partition contained in lambda, row-major recursive order. Small by
// design: callers pass rectangles at bounded sizes.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int row, int prev) -> void {
    out.push_back(acc.empty() ? Partition{} : Partition(acc));
    if (row >= lambda.rows()) return;
    for (int v = 1; v <= std::min(prev, lambda.parts[row]); ++v) {
      acc.push_back(v);
      self(self, row + 1, v);
      acc.pop_back();
    }
  };
  // Each emitted prefix is itself a contained partition; enumerate by first
  // row length then recurse.
  out.push_back(Partition{});
  for (int v = 1; v <= lambda.part(0); ++v) {
    acc.assign(1, v);
    rec(rec, 1, v);
  }
  // rec pushes its own prefix on entry, so drop the duplicate empty pushed
  // before the loop when lambda itself is empty.
  if (lambda.empty()) return {Partition{}};
  return out;
}

}  // namespace schurvec
