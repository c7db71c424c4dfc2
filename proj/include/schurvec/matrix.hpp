#pragma once

#include <optional>
#include <vector>

#include "schurvec/rational.hpp"

namespace schurvec {

// Dense matrix over Q with exact arithmetic. Row/column counts may be zero;
// all algorithms must behave on 0 x k and k x 0 shapes.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw precondition_error("negative matrix shape");
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return a_[idx(r, c)]; }
  const Rational& operator()(int r, int c) const { return a_[idx(r, c)]; }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  RatMat transposed() const {
    RatMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  RatMat columns(const std::vector<int>& which) const {
    RatMat out(rows_, static_cast<int>(which.size()));
    for (int j = 0; j < out.cols(); ++j)
      for (int r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
    return out;
  }

  friend RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_)
      throw precondition_error("matrix product shape mismatch");
    RatMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (bkj != 0) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw precondition_error("matrix sum shape mismatch");
    RatMat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }

  friend RatMat operator-(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw precondition_error("matrix difference shape mismatch");
    RatMat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }

  friend RatMat operator*(const Rational& s, const RatMat& a) {
    RatMat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw precondition_error("matrix index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_, cols_;
  std::vector<Rational> a_;
};

inline RatMat hcat(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw precondition_error("hcat shape mismatch");
  RatMat c(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int j = 0; j < a.cols(); ++j) c(r, j) = a(r, j);
    for (int j = 0; j < b.cols(); ++j) c(r, a.cols() + j) = b(r, j);
  }
  return c;
}

struct Rref {
  RatMat mat;
  std::vector<int> pivot_cols;  // strictly increasing, one per nonzero row
};

// Reduced row echelon form with the deterministic pivot rule: first column
// left to right, first nonzero row top to bottom. Exact arithmetic makes the
// result unique, so every caller sees the same echelon basis.
inline Rref rref(RatMat m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) /= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return Rref{std::move(m), std::move(pivots)};
}

inline int rank(const RatMat& m) {
  return static_cast<int>(rref(m).pivot_cols.size());
}

// Columns form a basis of ker(m); free variables set to 1 in ascending
// column order, so the basis is canonical.
inline RatMat kernel_basis(const RatMat& m) {
  Rref e = rref(m);
  std::vector<int> free_cols;
  {
    std::size_t pi = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (pi < e.pivot_cols.size() && e.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  RatMat k(m.cols(), static_cast<int>(free_cols.size()));
  for (int j = 0; j < k.cols(); ++j) {
    int f = free_cols[j];
    k(f, j) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      k(e.pivot_cols[r], j) = -e.mat(static_cast<int>(r), f);
  }
  return k;
}

// Canonical basis of the column space: the pivot columns of m itself.
inline RatMat column_space_basis(const RatMat& m) {
  return m.columns(rref(m).pivot_cols);
}

// Solves a * x = b for the unique solution with free variables zero.
// Returns nullopt when the system is inconsistent.
inline std::optional<RatMat> solve_right(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows())
    throw precondition_error("solve_right shape mismatch");
  RatMat aug(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  Rref e = rref(std::move(aug));
  for (int p : e.pivot_cols)
    if (p >= a.cols()) return std::nullopt;
  RatMat x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      x(e.pivot_cols[r], c) = e.mat(static_cast<int>(r), a.cols() + c);
  return x;
}

inline std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_right(m, RatMat::identity(m.rows()));
  if (!x) return std::nullopt;
  if (!(*x * m == RatMat::identity(m.rows()))) return std::nullopt;
  return x;
}

}  // namespace schurvec
