#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonrat/linalg.hpp"

namespace nonrat {

/// Prepend a homogenizing coordinate 1 to every row of an affine point
/// matrix.
template <class F>
Mat<F> homogenize(const Mat<F>& affine) {
  Mat<F> h(affine.rows(), affine.cols() + 1);
  for (Eigen::Index i = 0; i < affine.rows(); ++i) {
    h(i, 0) = F(1);
    for (Eigen::Index j = 0; j < affine.cols(); ++j) h(i, j + 1) = affine(i, j);
  }
  return h;
}

template <class F>
struct Dehomogenized {
  Mat<F> affine;              // n x (d-1)
  std::vector<long> weights;  // the admissible functional (1, w1, ..., w_{d-1})
};

/// Scale each row so a linear functional evaluates to 1, then drop the first
/// coordinate. The functional is found by a deterministic ladder: first
/// coordinate, then coordinate sums with small integer weights 0..n in
/// lexicographic order.
template <class F>
Dehomogenized<F> dehomogenize(const Mat<F>& hom) {
  const Eigen::Index n = hom.rows(), d = hom.cols();
  if (d < 2) throw std::invalid_argument("dehomogenize: need dimension >= 2");
  long limit = static_cast<long>(n) + 1;
  std::vector<long> w(static_cast<std::size_t>(d) - 1, 0);
  auto admissible = [&](const std::vector<long>& wts, Eigen::Index row) {
    F acc = hom(row, 0);
    for (Eigen::Index j = 1; j < d; ++j) acc = acc + F(wts[j - 1]) * hom(row, j);
    return !is_exact_zero(acc);
  };
  while (true) {
    bool ok = true;
    for (Eigen::Index i = 0; i < n && ok; ++i) ok = admissible(w, i);
    if (ok) break;
    // lexicographic over the reversed tuple: increment last weight first
    std::vector<long> rev(w.rbegin(), w.rend());
    std::size_t pos = rev.size();
    bool bumped = false;
    while (pos > 0) {
      --pos;
      if (rev[pos] < limit - 1) {
        ++rev[pos];
        for (std::size_t k = pos + 1; k < rev.size(); ++k) rev[k] = 0;
        bumped = true;
        break;
      }
    }
    if (!bumped)
      throw std::domain_error("dehomogenize: no admissible functional in the search ladder");
    w.assign(rev.rbegin(), rev.rend());
  }
  Dehomogenized<F> out;
  out.weights.assign(1, 1);
  out.weights.insert(out.weights.end(), w.begin(), w.end());
  out.affine.resize(n, d - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    F acc = hom(i, 0);
    for (Eigen::Index j = 1; j < d; ++j) acc = acc + F(w[j - 1]) * hom(i, j);
    F inv = F(1) / acc;
    for (Eigen::Index j = 1; j < d; ++j) out.affine(i, j - 1) = hom(i, j) * inv;
  }
  return out;
}

/// Line through two projectively distinct points of the plane.
template <class F>
Vec3<F> join(const Vec3<F>& p, const Vec3<F>& q) {
  Vec3<F> l = cross3(p, q);
  if (is_exact_zero(l(0)) && is_exact_zero(l(1)) && is_exact_zero(l(2)))
    throw std::invalid_argument("join: points are projectively equal");
  return l;
}

/// Intersection point of two projectively distinct lines.
template <class F>
Vec3<F> meet(const Vec3<F>& l, const Vec3<F>& m) {
  Vec3<F> p = cross3(l, m);
  if (is_exact_zero(p(0)) && is_exact_zero(p(1)) && is_exact_zero(p(2)))
    throw std::invalid_argument("meet: lines are projectively equal");
  return p;
}

/// Invertible M with M v_i a nonzero multiple of e_i (i = 1..3) and M v4 a
/// nonzero multiple of e1+e2+e3. Solves v4 = a1 v1 + a2 v2 + a3 v3 and maps
/// a_i v_i to e_i.
template <class F>
Mat<F> projective_basis_transform(const Vec3<F>& v1, const Vec3<F>& v2, const Vec3<F>& v3,
                                  const Vec3<F>& v4) {
  Mat<F> B(3, 3);
  B.col(0) = v1;
  B.col(1) = v2;
  B.col(2) = v3;
  F det = determinant(B);
  if (is_exact_zero(det)) throw std::invalid_argument("projective_basis_transform: v1,v2,v3 dependent");
  // Solve B a = v4 by elimination on the augmented matrix.
  Mat<F> aug(3, 4);
  aug.block(0, 0, 3, 3) = B;
  aug.col(3) = v4;
  auto rr = rref(aug);
  Vec3<F> alpha;
  for (int i = 0; i < 3; ++i) alpha(i) = rr.m(i, 3);
  for (int i = 0; i < 3; ++i)
    if (is_exact_zero(alpha(i)))
      throw std::invalid_argument("projective_basis_transform: degenerate quadruple");
  Mat<F> S(3, 3);
  for (int i = 0; i < 3; ++i) S.col(i) = B.col(i) * alpha(i);
  // M = S^{-1}: rref of [S | I]
  Mat<F> aug2(3, 6);
  aug2.block(0, 0, 3, 3) = S;
  aug2.block(0, 3, 3, 3) = Mat<F>::Identity(3, 3);
  auto rr2 = rref(aug2);
  if (rr2.rank() < 3) throw std::invalid_argument("projective_basis_transform: degenerate quadruple");
  return rr2.m.block(0, 3, 3, 3);
}

/// Projective map (dim+1 square matrix) sending each source point to a
/// nonzero multiple of the corresponding target point. Needs as many
/// correspondences as the matrix has rows plus one; fails if the solution
/// space is not one-dimensional or the map is singular.
template <class F>
Mat<F> solve_projective_map(const Mat<F>& src, const Mat<F>& dst) {
  if (src.rows() != dst.rows() || src.cols() != dst.cols())
    throw std::invalid_argument("solve_projective_map: shape mismatch");
  const Eigen::Index d = src.cols();
  const Eigen::Index npts = src.rows();
  // unknowns: d*d entries of M, row-major. Equations per correspondence:
  // (M s)_i t_k - (M s)_k t_i = 0 for all i != k, with k the first nonzero
  // coordinate of t.
  std::vector<Eigen::Index> anchor(npts);
  for (Eigen::Index p = 0; p < npts; ++p) {
    Eigen::Index k = -1;
    for (Eigen::Index j = 0; j < d; ++j)
      if (!is_exact_zero(dst(p, j))) {
        k = j;
        break;
      }
    if (k < 0) throw std::invalid_argument("solve_projective_map: zero target point");
    anchor[p] = k;
  }
  Mat<F> sys(npts * (d - 1), d * d);
  sys.setConstant(F(0));
  Eigen::Index row = 0;
  for (Eigen::Index p = 0; p < npts; ++p) {
    Eigen::Index k = anchor[p];
    for (Eigen::Index i = 0; i < d; ++i) {
      if (i == k) continue;
      for (Eigen::Index j = 0; j < d; ++j) {
        sys(row, i * d + j) += dst(p, k) * src(p, j);
        sys(row, k * d + j) -= dst(p, i) * src(p, j);
      }
      ++row;
    }
  }
  Mat<F> ns = nullspace(sys);
  if (ns.rows() != 1)
    throw std::invalid_argument("solve_projective_map: correspondence is degenerate (solution space dim " +
                                std::to_string(ns.rows()) + ")");
  Mat<F> M(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) M(i, j) = ns(0, i * d + j);
  if (is_exact_zero(determinant(M)))
    throw std::invalid_argument("solve_projective_map: map is singular");
  return M;
}

namespace pg_detail {

template <class F>
struct QuadFrame {
  Vec3<F> origin, u, v, n;  // n = u x v
  Mat<F> corner2d;          // 4 x 3 homogeneous in-plane coordinates
};

template <class F>
QuadFrame<F> quad_frame(const std::array<Vec3<F>, 4>& q) {
  QuadFrame<F> f;
  f.origin = q[0];
  f.u = q[1] - q[0];
  f.v = q[3] - q[0];
  f.n = cross3(f.u, f.v);
  if (is_exact_zero(f.n(0)) && is_exact_zero(f.n(1)) && is_exact_zero(f.n(2)))
    throw std::invalid_argument("space_map_quad: quad has collinear corners");
  // express q[2] in the frame; its normal coordinate must vanish
  Mat<F> sys(3, 4);
  for (int r = 0; r < 3; ++r) {
    sys(r, 0) = f.u(r);
    sys(r, 1) = f.v(r);
    sys(r, 2) = f.n(r);
    sys(r, 3) = q[2](r) - q[0](r);
  }
  auto rr = rref(sys);
  if (rr.rank() != 3 || !is_exact_zero(rr.m(2, 3)))
    throw std::invalid_argument("space_map_quad: quad is not planar");
  f.corner2d.resize(4, 3);
  f.corner2d.row(0) << F(1), F(0), F(0);
  f.corner2d.row(1) << F(1), F(1), F(0);
  f.corner2d.row(2) << F(1), rr.m(0, 3), rr.m(1, 3);
  f.corner2d.row(3) << F(1), F(0), F(1);
  return f;
}

template <class F>
Mat<F> frame_basis(const QuadFrame<F>& f) {
  Mat<F> b(4, 4);
  for (int r = 0; r < 3; ++r) {
    b(r, 0) = f.origin(r);
    b(r, 1) = f.u(r);
    b(r, 2) = f.v(r);
    b(r, 3) = f.n(r);
  }
  b(3, 0) = F(1);
  b(3, 1) = F(0);
  b(3, 2) = F(0);
  b(3, 3) = F(0);
  return b;
}

template <class F>
Mat<F> invert4(const Mat<F>& m) {
  Mat<F> aug(4, 8);
  aug.block(0, 0, 4, 4) = m;
  aug.block(0, 4, 4, 4) = Mat<F>::Identity(4, 4);
  auto rr = rref(aug);
  if (rr.rank() != 4) throw std::invalid_argument("invert4: singular matrix");
  return rr.m.block(0, 4, 4, 4);
}

}  // namespace pg_detail

/// Projective transformation of 3-space carrying one flat quadrilateral onto
/// another, corner to corner in order: the planar four-point frame map
/// extended along the plane normals, scaled there by `lambda` (its sign
/// selects which side maps to which).
template <class F>
Mat<F> quad_space_map(const std::array<Vec3<F>, 4>& src, const std::array<Vec3<F>, 4>& dst,
                      const F& lambda) {
  if (is_exact_zero(lambda)) throw std::invalid_argument("quad_space_map: lambda must be nonzero");
  auto fs = pg_detail::quad_frame(src);
  auto fd = pg_detail::quad_frame(dst);
  auto row = [](const Mat<F>& m, int i) {
    Vec3<F> v;
    for (int c = 0; c < 3; ++c) v(c) = m(i, c);
    return v;
  };
  Mat<F> ms = projective_basis_transform(row(fs.corner2d, 0), row(fs.corner2d, 1),
                                         row(fs.corner2d, 2), row(fs.corner2d, 3));
  Mat<F> md = projective_basis_transform(row(fd.corner2d, 0), row(fd.corner2d, 1),
                                         row(fd.corner2d, 2), row(fd.corner2d, 3));
  // phi = md^{-1} ms sends source in-plane coordinates to target ones
  Mat<F> aug(3, 6);
  aug.block(0, 0, 3, 3) = md;
  aug.block(0, 3, 3, 3) = ms;
  auto rrp = rref(aug);
  Mat<F> phi = rrp.m.block(0, 3, 3, 3);
  Mat<F> bs = pg_detail::frame_basis(fs), bd = pg_detail::frame_basis(fd);
  Mat<F> mid(4, 4);
  mid.setConstant(F(0));
  mid.block(0, 0, 3, 3) = phi;
  mid(3, 3) = lambda;
  return bd * mid * pg_detail::invert4(bs);
}

/// Map a point of 3-space by a 4x4 projective matrix; fails on points sent
/// to infinity.
template <class F>
Vec3<F> apply_space_map(const Mat<F>& m, const Vec3<F>& p) {
  Vec4<F> h;
  for (int c = 0; c < 3; ++c) h(c) = p(c);
  h(3) = F(1);
  Vec4<F> y;
  for (int r = 0; r < 4; ++r) {
    F acc = F(0);
    for (int c = 0; c < 4; ++c) acc = acc + m(r, c) * h(c);
    y(r) = acc;
  }
  if (is_exact_zero(y(3))) throw std::domain_error("apply_space_map: point sent to infinity");
  Vec3<F> out;
  F inv = F(1) / y(3);
  for (int c = 0; c < 3; ++c) out(c) = y(c) * inv;
  return out;
}

/// Map one flat convex quadrilateral onto another, corners
/// in order. The four coplanar corners pin the map only up to a
/// one-parameter homology, so the first auxiliary pair fixes the side
/// correspondence and the second is verified as an orientation witness.
template <class F>
Mat<F> space_map_quad(const std::array<Vec3<F>, 4>& src, const std::array<Vec3<F>, 2>& src_aux,
                      const std::array<Vec3<F>, 4>& dst, const std::array<Vec3<F>, 2>& dst_aux) {
  auto fs = pg_detail::quad_frame(src);
  auto fd = pg_detail::quad_frame(dst);
  auto side = [](const pg_detail::QuadFrame<F>& f, const Vec3<F>& p) {
    F acc = F(0);
    for (int c = 0; c < 3; ++c) acc = acc + f.n(c) * (p(c) - f.origin(c));
    return exact_sign(acc);
  };
  int s1 = side(fs, src_aux[0]), d1 = side(fd, dst_aux[0]);
  if (s1 == 0 || d1 == 0)
    throw std::invalid_argument("space_map_quad: auxiliary point lies on the quad plane");
  F lambda = s1 == d1 ? F(1) : F(-1);
  Mat<F> m = quad_space_map(src, dst, lambda);
  // orientation check with the second auxiliary pair
  int s2 = side(fs, src_aux[1]), d2 = side(fd, dst_aux[1]);
  if (s2 == 0 || d2 == 0)
    throw std::invalid_argument("space_map_quad: auxiliary point lies on the quad plane");
  Vec3<F> img = apply_space_map(m, src_aux[1]);
  if (side(fd, img) != d2)
    throw std::invalid_argument("space_map_quad: second auxiliary point fails the orientation check");
  return m;
}

}  // namespace nonrat
