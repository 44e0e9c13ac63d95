#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satake/scalar.hpp"

namespace satake {

// Dense row-major matrix over a ring or field.
template <class F>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<F>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
      assert(static_cast<int>(rows[i].size()) == c);
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  const std::vector<F>& data() const { return a_; }
  std::vector<F>& data() { return a_; }

  std::vector<F> row(int i) const { return std::vector<F>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  std::vector<F> col(int j) const {
    std::vector<F> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const std::vector<F>& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    assert(static_cast<int>(v.size()) == c_);
    std::vector<F> out(r_, F(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.c_ == b.r_);
    Mat m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) { return a.a_ < b.a_; }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<F> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rational>;

inline QMat to_q(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = Rational(static_cast<long>(m(i, j)));
  return q;
}

std::string to_string(const IMat& m);
std::string to_string(const QMat& m);

// Row-reduces in place; returns pivot columns.
template <class F>
std::vector<int> row_reduce(Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Mat<F> m) {
  return static_cast<int>(row_reduce(m).size());
}

template <class F>
F det(Mat<F> m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  F d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return F(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    F inv = F(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  int n = m.rows();
  Mat<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto piv = row_reduce(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  auto piv = row_reduce(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves m x = b; nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
  Mat<F> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m.cols());
  return x;
}

// Incrementally maintained echelon basis of a subspace of F^dim.
template <class F>
class Subspace {
 public:
  explicit Subspace(int dim = 0) : dim_(dim) {}

  int ambient() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  // Returns the residue of v modulo the subspace.
  std::vector<F> reduce(std::vector<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int p = pivots_[r];
      if (is_zero(v[p])) continue;
      F f = v[p];
      const auto& row = rows_[r];
      for (int j = 0; j < dim_; ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    auto res = reduce(v);
    for (const auto& x : res)
      if (!is_zero(x)) return false;
    return true;
  }

  // Adds v; returns true when the dimension grew.
  bool add(const std::vector<F>& v) {
    auto res = reduce(v);
    int p = -1;
    for (int j = 0; j < dim_; ++j)
      if (!is_zero(res[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    F inv = F(1) / res[p];
    for (auto& x : res) x *= inv;
    rows_.push_back(std::move(res));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<std::vector<F>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int dim_;
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

}  // namespace satake
