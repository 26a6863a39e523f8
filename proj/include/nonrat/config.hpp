#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "nonrat/projgeom.hpp"

namespace nonrat {

/// Abstract incidence configuration: n points plus prescribed lines
/// (index sets, 1-based, each of size >= 3; two lines share at most one
/// point).
struct AbstractConfiguration {
  int n = 0;
  std::vector<std::vector<int>> lines;
  std::vector<std::string> labels;

  void validate() const;
  /// All 3-subsets of prescribed lines, sorted.
  std::vector<std::array<int, 3>> prescribed_triples() const;
  bool triple_prescribed(int i, int j, int k) const;
};

/// The extended pentagon configuration: 11 points, five diagonal lines of
/// four points and five symmetry lines of three points. Point indices follow
/// the labeling used in the derivation scripts (p4 is the centre).
AbstractConfiguration pentagon11();

/// The nine-point restriction obtained by deleting p6 and p11 from
/// pentagon11; surviving points are renumbered 1..9 keeping their relative
/// order (old 7,8,9,10 become 6,7,8,9). Lines reduced below 3 points are
/// dropped, the rest truncated.
AbstractConfiguration pentagon9();

struct VerificationReport {
  std::vector<std::array<int, 3>> collinearity_failures;  // prescribed but not collinear
  std::vector<std::array<int, 3>> collapse_failures;      // collinear but not prescribed
  std::vector<std::array<int, 2>> coincidence_failures;   // projectively equal point pairs
  std::vector<int> stability_failures;                    // deleting this point leaves the rest collinear

  bool empty() const {
    return collinearity_failures.empty() && collapse_failures.empty() &&
           coincidence_failures.empty() && stability_failures.empty();
  }
  std::string summary() const;
};

/// Checks a homogeneous realization (rows = points) against the prescribed
/// collinearity structure: prescribed triples dependent, all other triples
/// independent, points pairwise projectively distinct, and stability
/// (deleting any one point must not leave the rest collinear; vacuous when
/// fewer than three points remain).
template <class F>
VerificationReport verify_realization(const AbstractConfiguration& c, const Mat<F>& r) {
  if (r.rows() != c.n || r.cols() != 3)
    throw std::invalid_argument("verify_realization: realization must be n x 3");
  VerificationReport rep;
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j)
      for (int k = j + 1; k <= c.n; ++k) {
        Mat<F> t(3, 3);
        t.row(0) = r.row(i - 1);
        t.row(1) = r.row(j - 1);
        t.row(2) = r.row(k - 1);
        bool dep = is_exact_zero(determinant(t));
        bool want = c.triple_prescribed(i, j, k);
        if (want && !dep) rep.collinearity_failures.push_back({i, j, k});
        if (!want && dep) rep.collapse_failures.push_back({i, j, k});
      }
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j) {
      Vec3<F> p = r.row(i - 1).transpose(), q = r.row(j - 1).transpose();
      if (proj_equal<F, 3>(p, q)) rep.coincidence_failures.push_back({i, j});
    }
  if (c.n >= 4) {
    for (int i = 1; i <= c.n; ++i) {
      Mat<F> rest(c.n - 1, 3);
      Eigen::Index t = 0;
      for (int j = 1; j <= c.n; ++j)
        if (j != i) rest.row(t++) = r.row(j - 1);
      if (rank(rest) <= 2) rep.stability_failures.push_back(i);
    }
  }
  return rep;
}

struct RealizationSystem {
  int equations = 0;
  int inequalities = 0;
  std::string text;
};

/// Semi-algebraic description of the realization space over 2n affine
/// coordinates, with the first non-prescribed-collinear triple of points
/// pinned to (0,0), (1,0), (0,1): one determinant equation per prescribed
/// triple, one strict det^2 inequality per non-prescribed triple.
RealizationSystem emit_realization_system(const AbstractConfiguration& c);

}  // namespace nonrat
