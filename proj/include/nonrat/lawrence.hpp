#pragma once

#include <set>
#include <string>
#include <vector>

#include "nonrat/config.hpp"
#include "nonrat/script.hpp"

namespace nonrat {

/// Lawrence lifting of an n-point planar configuration: the 2n x (2+n)
/// matrix whose rows are the lifted points (heights h1 on the first block,
/// h2 on the second). Rows i and n+i agree in the first two coordinates.
template <class F>
struct LawrenceLifting {
  int n = 0;
  F h1, h2;
  Mat<F> rows;    // 2n x (2+n)
  Mat<F> source;  // n x 2 affine provenance
};

template <class F>
struct FaceCertificate {
  Vec<F> functional;           // 2+n coefficients
  F constant{};                // added constant
  std::vector<int> vertices;   // claimed vertex rows, 1-based into rows
  int dimension = 0;           // claimed affine dimension
  bool verified = false;
  std::string kind;            // "edge" | "point-facet" | "line-facet"
  std::string detail;
};

/// Labeled realization of the combinatorial type of a Lawrence polytope:
/// vertex rows plus the pair labeling and the point facets F_i (by default
/// the complement of pair i). Facet data is taken as given and verified by
/// dimension checks, never recomputed from a hull.
template <class F>
struct LabeledPolytope {
  Mat<F> rows;                                 // m x (2+n)
  std::vector<std::array<int, 2>> pairs;       // 1-based rows of (bar v_i, barbar v_i)
  std::vector<std::vector<int>> point_facets;  // 1-based vertex sets, one per i
};

class RecoveryError : public std::runtime_error {
 public:
  explicit RecoveryError(const std::string& m) : std::runtime_error(m) {}
};

template <class F>
struct Recovery {
  Mat<F> basis;    // 3 x (3+n): rows span R
  Mat<F> vectors;  // n x 3: v_i in the R-basis, first nonzero entry 1
};

template <class F>
LawrenceLifting<F> lawrence_lift(const Mat<F>& affine, const F& h1, const F& h2) {
  const int n = static_cast<int>(affine.rows());
  if (affine.cols() != 2) throw std::invalid_argument("lawrence_lift: affine realization must be n x 2");
  if (n < 3) throw std::invalid_argument("lawrence_lift: need at least 3 points");
  if (exact_sign(h1) <= 0 || exact_sign(h2 - h1) <= 0)
    throw std::invalid_argument("lawrence_lift: heights must satisfy 0 < h1 < h2");
  Mat<F> hom = homogenize(affine);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec3<F> p = hom.row(i).transpose(), q = hom.row(j).transpose();
      if (proj_equal<F, 3>(p, q))
        throw std::invalid_argument("lawrence_lift: points " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " coincide");
    }
  if (rank(hom) <= 2) throw std::invalid_argument("lawrence_lift: points are all collinear");
  if (n >= 4) {
    for (int i = 0; i < n; ++i) {
      Mat<F> rest(n - 1, 3);
      Eigen::Index t = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) rest.row(t++) = hom.row(j);
      if (rank(rest) <= 2)
        throw std::invalid_argument("lawrence_lift: configuration is not stable (deleting point " +
                                    std::to_string(i + 1) + " leaves the rest collinear)");
    }
  }
  LawrenceLifting<F> l;
  l.n = n;
  l.h1 = h1;
  l.h2 = h2;
  l.rows.resize(2 * n, 2 + n);
  l.rows.setConstant(F(0));
  for (int i = 0; i < n; ++i) {
    l.rows(i, 0) = affine(i, 0);
    l.rows(i, 1) = affine(i, 1);
    l.rows(i, 2 + i) = h1;
    l.rows(n + i, 0) = affine(i, 0);
    l.rows(n + i, 1) = affine(i, 1);
    l.rows(n + i, 2 + i) = h2;
  }
  l.source = affine;
  return l;
}

/// Exact check of a face certificate: the functional (plus constant) is zero
/// on every claimed vertex, strictly positive on every other row, and the
/// claimed vertices have affine rank dimension + 1.
template <class F>
bool verify_certificate(const Mat<F>& rows, FaceCertificate<F>& cert) {
  const Eigen::Index m = rows.rows();
  std::set<int> claimed(cert.vertices.begin(), cert.vertices.end());
  for (Eigen::Index r = 0; r < m; ++r) {
    F val = cert.constant;
    for (Eigen::Index j = 0; j < rows.cols(); ++j) val = val + cert.functional(j) * rows(r, j);
    int s = exact_sign(val);
    bool want_zero = claimed.count(static_cast<int>(r) + 1) > 0;
    if (want_zero ? s != 0 : s <= 0) {
      cert.verified = false;
      return false;
    }
  }
  Mat<F> claimed_rows(static_cast<Eigen::Index>(claimed.size()), rows.cols());
  Eigen::Index t = 0;
  for (int r : claimed) claimed_rows.row(t++) = rows.row(r - 1);
  cert.verified = rank(homogenize(claimed_rows)) == cert.dimension + 1;
  return cert.verified;
}

/// Certificate that {bar v_i, barbar v_i} is an edge: the pair minimizes
/// (y_1 + ... + y_n) - y_i, shifted so the minimum is 0.
template <class F>
FaceCertificate<F> edge_certificate(const LawrenceLifting<F>& l, int i) {
  if (l.n < 2) throw std::invalid_argument("edge_certificate: lifting degenerate");
  if (i < 1 || i > l.n) throw std::invalid_argument("edge_certificate: index out of range");
  FaceCertificate<F> c;
  c.kind = "edge";
  c.detail = "e_" + std::to_string(i);
  c.functional.resize(2 + l.n);
  c.functional.setConstant(F(0));
  for (int j = 0; j < l.n; ++j)
    if (j + 1 != i) c.functional(2 + j) = F(1);
  c.constant = F(0);
  c.vertices = {i, l.n + i};
  c.dimension = 1;
  if (!verify_certificate(l.rows, c))
    throw std::domain_error("edge_certificate: verification failed for e_" + std::to_string(i) +
                            " (corrupted lifting)");
  return c;
}

/// Certificate for the facet F_i spanned by all rows except the pair i: all
/// of them minimize y_i. The claimed dimension is 1+n for n >= 4; for n = 3
/// the complement of a pair spans only a 3-face of the simplex.
template <class F>
FaceCertificate<F> facet_point_certificate(const LawrenceLifting<F>& l, int i) {
  if (l.n < 2) throw std::invalid_argument("facet_point_certificate: need n >= 2");
  if (i < 1 || i > l.n) throw std::invalid_argument("facet_point_certificate: index out of range");
  FaceCertificate<F> c;
  c.kind = "point-facet";
  c.detail = "F_" + std::to_string(i);
  c.functional.resize(2 + l.n);
  c.functional.setConstant(F(0));
  c.functional(2 + (i - 1)) = F(1);
  c.constant = F(0);
  for (int r = 1; r <= 2 * l.n; ++r)
    if (r != i && r != l.n + i) c.vertices.push_back(r);
  c.dimension = l.n >= 4 ? 1 + l.n : 2 * l.n - 3;
  if (!verify_certificate(l.rows, c))
    throw std::domain_error("facet_point_certificate: verification failed for F_" + std::to_string(i));
  return c;
}

/// Partition of the source points by a line: on it, strictly negative side,
/// strictly positive side.
struct LinePartition {
  std::vector<int> on, neg, pos;  // 1-based point indices
};

/// Certificate for the facet F^l attached to a configuration line, built
/// from an affine witness functional (c0 + c1 x + c2 y) that vanishes on the
/// line: alpha_j = 0 on the line, -l(p_j)/h1 on the negative side,
/// -l(p_j)/h2 on the positive side.
template <class F>
FaceCertificate<F> facet_line_certificate(const LawrenceLifting<F>& l, const LinePartition& part,
                                          const Vec3<F>& witness) {
  FaceCertificate<F> c;
  c.kind = "line-facet";
  auto lval = [&](int p) {
    return witness(0) + witness(1) * l.source(p - 1, 0) + witness(2) * l.source(p - 1, 1);
  };
  for (int p : part.on)
    if (exact_sign(lval(p)) != 0)
      throw std::invalid_argument("facet_line_certificate: witness does not vanish on point " + std::to_string(p));
  for (int p : part.neg)
    if (exact_sign(lval(p)) >= 0)
      throw std::invalid_argument("facet_line_certificate: witness not negative on point " + std::to_string(p));
  for (int p : part.pos)
    if (exact_sign(lval(p)) <= 0)
      throw std::invalid_argument("facet_line_certificate: witness not positive on point " + std::to_string(p));
  if (part.on.size() + part.neg.size() + part.pos.size() != static_cast<std::size_t>(l.n))
    throw std::invalid_argument("facet_line_certificate: partition does not cover all points");
  c.functional.resize(2 + l.n);
  c.functional.setConstant(F(0));
  c.functional(0) = witness(1);
  c.functional(1) = witness(2);
  c.constant = witness(0);
  for (int p : part.neg) c.functional(2 + (p - 1)) = -lval(p) / l.h1;
  for (int p : part.pos) c.functional(2 + (p - 1)) = -lval(p) / l.h2;
  for (int p : part.on) {
    c.vertices.push_back(p);
    c.vertices.push_back(l.n + p);
  }
  for (int p : part.neg) c.vertices.push_back(p);
  for (int p : part.pos) c.vertices.push_back(l.n + p);
  std::sort(c.vertices.begin(), c.vertices.end());
  c.dimension = 1 + l.n;
  if (!verify_certificate(l.rows, c))
    throw std::domain_error("facet_line_certificate: verification failed");
  return c;
}

/// Maximal collinear subsets (>= 3 points) of an affine planar point set;
/// for a collapse-free realization these are exactly the prescribed lines.
template <class F>
std::vector<std::vector<int>> collinear_lines(const Mat<F>& affine) {
  const int n = static_cast<int>(affine.rows());
  Mat<F> hom = homogenize(affine);
  std::set<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> members;
      for (int k = 0; k < n; ++k) {
        Mat<F> t(3, 3);
        t.row(0) = hom.row(i);
        t.row(1) = hom.row(j);
        t.row(2) = hom.row(k);
        if (k == i || k == j || is_exact_zero(determinant(t))) members.push_back(k + 1);
      }
      if (members.size() >= 3) out.insert(members);
    }
  return {out.begin(), out.end()};
}

/// Line partition plus witness for every maximal line of the source
/// configuration, with the witness sign fixed so the lowest-index point off
/// the line is on the positive side.
template <class F>
std::vector<std::pair<LinePartition, Vec3<F>>> line_partitions(const Mat<F>& affine) {
  std::vector<std::pair<LinePartition, Vec3<F>>> out;
  Mat<F> hom = homogenize(affine);
  for (const auto& line : collinear_lines(affine)) {
    Vec3<F> p = hom.row(line[0] - 1).transpose();
    Vec3<F> q = hom.row(line[1] - 1).transpose();
    Vec3<F> w = join(p, q);
    LinePartition part;
    part.on = line;
    std::set<int> on(line.begin(), line.end());
    int flip = 0;
    for (int k = 1; k <= static_cast<int>(affine.rows()); ++k) {
      if (on.count(k)) continue;
      F val = w(0) * hom(k - 1, 0) + w(1) * hom(k - 1, 1) + w(2) * hom(k - 1, 2);
      int s = exact_sign(val);
      if (s == 0) throw std::domain_error("line_partitions: realization collapses");
      if (flip == 0) flip = s;  // lowest-index off point fixes the sign
      if (s == flip)
        part.pos.push_back(k);
      else
        part.neg.push_back(k);
    }
    if (flip < 0) w = -w;
    out.push_back({part, w});
  }
  return out;
}

template <class F>
LabeledPolytope<F> as_labeled_polytope(const LawrenceLifting<F>& l) {
  LabeledPolytope<F> p;
  p.rows = l.rows;
  for (int i = 1; i <= l.n; ++i) {
    p.pairs.push_back({i, l.n + i});
    std::vector<int> facet;
    for (int r = 1; r <= 2 * l.n; ++r)
      if (r != i && r != l.n + i) facet.push_back(r);
    p.point_facets.push_back(facet);
  }
  return p;
}

/// Zero/nonzero pattern of all 3x3 determinants of an n x 3 matrix, as the
/// sorted list of dependent triples.
template <class F>
std::vector<std::array<int, 3>> collinearity_pattern(const Mat<F>& pts) {
  const int n = static_cast<int>(pts.rows());
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Mat<F> t(3, 3);
        t.row(0) = pts.row(i - 1);
        t.row(1) = pts.row(j - 1);
        t.row(2) = pts.row(k - 1);
        if (is_exact_zero(determinant(t))) out.push_back({i, j, k});
      }
  return out;
}

/// Recovery of the encoded configuration from any realization of the
/// combinatorial type of a Lawrence polytope. Homogenizes to 3+n
/// coordinates, computes each facet hyperplane H_i, intersects them into the
/// 3-dimensional space R, and cuts each edge span E_i down to the line
/// V_i = R meet E_i. Every dimension is checked exactly and failures name
/// the offending subspace.
///
/// For n = 3 the Lawrence polytope is a simplex and its face lattice carries
/// no projective data (every labeling is realized by every simplex); the
/// recovery returns the standard triangle, which has the correct (empty)
/// collinearity pattern.
template <class F>
Recovery<F> recover_configuration(const LabeledPolytope<F>& p) {
  const int n = static_cast<int>(p.pairs.size());
  if (n < 3) throw RecoveryError("recover: need at least 3 pairs");
  if (p.point_facets.size() != static_cast<std::size_t>(n))
    throw RecoveryError("recover: need one point facet per pair");
  Mat<F> hom = homogenize(p.rows);
  const Eigen::Index d = hom.cols();  // 3+n
  if (rank(hom) != d)
    throw RecoveryError("recover: vertex rows do not span dimension " + std::to_string(d - 1));
  Recovery<F> out;
  if (n == 3) {
    out.basis = Mat<F>::Identity(3, d);
    out.vectors = Mat<F>::Identity(3, 3);
    return out;
  }
  Mat<F> normals(n, d);
  for (int i = 0; i < n; ++i) {
    const auto& facet = p.point_facets[i];
    Mat<F> span(static_cast<Eigen::Index>(facet.size()), d);
    for (std::size_t r = 0; r < facet.size(); ++r) {
      int row = facet[r];
      if (row < 1 || row > p.rows.rows()) throw RecoveryError("recover: facet row out of range");
      span.row(static_cast<Eigen::Index>(r)) = hom.row(row - 1);
    }
    Mat<F> ns = nullspace(span);
    if (ns.rows() != 1)
      throw RecoveryError("recover: F_" + std::to_string(i + 1) + " does not span a hyperplane (normal space has dimension " +
                          std::to_string(ns.rows()) + ")");
    normals.row(i) = ns.row(0);
  }
  Mat<F> R = nullspace(normals);
  if (R.rows() != 3)
    throw RecoveryError("recover: R has dimension " + std::to_string(R.rows()));
  out.basis = R;
  out.vectors.resize(n, 3);
  for (int i = 0; i < n; ++i) {
    Mat<F> E(2, d);
    E.row(0) = hom.row(p.pairs[i][0] - 1);
    E.row(1) = hom.row(p.pairs[i][1] - 1);
    // x = alpha R = beta E: solve [R^T | -E^T] (alpha; beta) = 0
    Mat<F> sys(d, 5);
    for (Eigen::Index c = 0; c < 3; ++c) sys.col(c) = R.row(c).transpose();
    for (Eigen::Index c = 0; c < 2; ++c) sys.col(3 + c) = -E.row(c).transpose();
    Mat<F> ns = nullspace(sys);
    if (ns.rows() != 1)
      throw RecoveryError("recover: V_" + std::to_string(i + 1) + " = R meet E_" + std::to_string(i + 1) +
                          " has dimension " + std::to_string(ns.rows()));
    Vec3<F> alpha;
    for (int c = 0; c < 3; ++c) alpha(c) = ns(0, c);
    // normalize first nonzero entry to 1
    for (int c = 0; c < 3; ++c) {
      if (!is_exact_zero(alpha(c))) {
        F inv = F(1) / alpha(c);
        for (int j = 0; j < 3; ++j) alpha(j) = alpha(j) * inv;
        break;
      }
    }
    if (is_exact_zero(alpha(0)) && is_exact_zero(alpha(1)) && is_exact_zero(alpha(2)))
      throw RecoveryError("recover: V_" + std::to_string(i + 1) + " is trivial");
    out.vectors.row(i) = alpha.transpose();
  }
  return out;
}

/// End-to-end certificate for the non-rational polytope built from a
/// construction script: the configuration-level certificate, the lifting
/// over Q(sqrt d), all edge and facet certificates, and the recovery
/// round-trip check.
struct PolytopeCertificateSummary {
  int dimension = 0;
  int vertex_count = 0;
  int edge_certificates = 0;
  int point_facet_certificates = 0;
  int line_facet_certificates = 0;
  bool all_verified = false;
  bool roundtrip_ok = false;
};

struct NonrationalPolytopeCertificate {
  NonrationalityCertificate configuration;
  LawrenceLifting<QuadExt> lifting;
  std::vector<FaceCertificate<QuadExt>> certificates;
  Recovery<QuadExt> recovery;
  PolytopeCertificateSummary summary;
};

NonrationalPolytopeCertificate certify_nonrational_polytope(const ConstructionScript& script,
                                                            const QuadExt& h1 = QuadExt(1),
                                                            const QuadExt& h2 = QuadExt(2));

}  // namespace nonrat
