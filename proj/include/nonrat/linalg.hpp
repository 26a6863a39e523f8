#pragma once

#include <stdexcept>
#include <vector>

#include "nonrat/dense.hpp"

namespace nonrat {

/// Reduced row echelon form computed with exact field division and
/// first-nonzero pivot selection (deterministic; no magnitude heuristics
/// since arithmetic is exact).
template <class F>
struct RrefResult {
  Mat<F> m;
  std::vector<Eigen::Index> pivot_cols;
  int swaps = 0;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

template <class Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m_in) {
  using F = typename Derived::Scalar;
  RrefResult<F> out;
  Mat<F> m = m_in;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!is_exact_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      m.row(piv).swap(m.row(r));
      ++out.swaps;
    }
    F inv = F(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_exact_zero(m(i, c))) continue;
      F f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Exact determinant by forward elimination with exact division.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m_in) {
  using F = typename Derived::Scalar;
  if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant: matrix not square");
  Mat<F> m = m_in;
  const Eigen::Index n = m.rows();
  F det = F(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i) {
      if (!is_exact_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return F(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    F inv = F(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_exact_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Basis of {x : m x = 0} as rows, each normalized so its first nonzero
/// entry is 1. Row count equals cols - rank(m).
template <class Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m_in) {
  using F = typename Derived::Scalar;
  auto rr = rref(m_in);
  const Eigen::Index cols = m_in.cols();
  std::vector<Eigen::Index> free_cols;
  {
    std::size_t k = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (k < rr.pivot_cols.size() && rr.pivot_cols[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  Mat<F> basis(static_cast<Eigen::Index>(free_cols.size()), cols);
  basis.setConstant(F(0));
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    Eigen::Index fc = free_cols[b];
    basis(b, fc) = F(1);
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      basis(b, rr.pivot_cols[r]) = -rr.m(static_cast<Eigen::Index>(r), fc);
    // normalize first nonzero entry to 1
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!is_exact_zero(basis(b, c))) {
        F inv = F(1) / basis(b, c);
        for (Eigen::Index j = 0; j < cols; ++j) basis(b, j) = basis(b, j) * inv;
        break;
      }
    }
  }
  return basis;
}

template <class DA, class DB>
Vec3<typename DA::Scalar> cross3(const Eigen::MatrixBase<DA>& u, const Eigen::MatrixBase<DB>& v) {
  Vec3<typename DA::Scalar> w;
  w(0) = u(1) * v(2) - u(2) * v(1);
  w(1) = u(2) * v(0) - u(0) * v(2);
  w(2) = u(0) * v(1) - u(1) * v(0);
  return w;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_exact_zero(v(i))) return false;
  return true;
}

/// Projective equality as rank({p, q}) = 1 (no division, any field).
template <class F, int N>
bool proj_equal(const Eigen::Matrix<F, N, 1>& p, const Eigen::Matrix<F, N, 1>& q) {
  Mat<F> m(2, p.size());
  m.row(0) = p.transpose();
  m.row(1) = q.transpose();
  return rank(m) == 1;
}

}  // namespace nonrat
