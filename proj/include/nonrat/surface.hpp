#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nonrat/projgeom.hpp"
#include "nonrat/script.hpp"

namespace nonrat {

/// Polyhedral surface made of quadrilateral faces with exact vertex
/// coordinates in 3-space. Vertex ids are indices into `vertices`.
template <class F>
struct QuadMesh {
  std::vector<Vec3<F>> vertices;
  std::vector<std::array<int, 4>> faces;
  std::map<std::string, int> tags;

  int add_vertex(const Vec3<F>& v) {
    vertices.push_back(v);
    return static_cast<int>(vertices.size()) - 1;
  }
};

/// Abstract Toblerone torus: 3x3 grid with opposite edges identified.
/// Vertex (r, c) has id 3r + c; nine quads.
struct TobleroneAbstract {
  int vertex_count = 9;
  std::vector<std::array<int, 4>> faces;
};
TobleroneAbstract toblerone_abstract();

enum class FaceStatus { Ok, Degenerate, NotFlat, NotConvex };

template <class F>
FaceStatus face_status(const std::vector<Vec3<F>>& vs, const std::array<int, 4>& face) {
  std::array<Vec3<F>, 4> p;
  for (int i = 0; i < 4; ++i) p[i] = vs[face[i]];
  Mat<F> diffs(3, 3);
  for (int i = 0; i < 3; ++i) diffs.row(i) = (p[i + 1] - p[0]).transpose();
  Eigen::Index rk = rank(diffs);
  if (rk <= 1) return FaceStatus::Degenerate;
  if (rk == 3) return FaceStatus::NotFlat;
  Vec3<F> ref;
  bool have_ref = false;
  for (int i = 0; i < 4; ++i) {
    Vec3<F> e1 = p[(i + 1) % 4] - p[i];
    Vec3<F> e2 = p[(i + 2) % 4] - p[(i + 1) % 4];
    Vec3<F> n = cross3(e1, e2);
    if (is_exact_zero(n(0)) && is_exact_zero(n(1)) && is_exact_zero(n(2)))
      return FaceStatus::NotConvex;  // collinear consecutive edges
    if (!have_ref) {
      ref = n;
      have_ref = true;
      continue;
    }
    F dot = ref(0) * n(0) + ref(1) * n(1) + ref(2) * n(2);
    if (exact_sign(dot) <= 0) return FaceStatus::NotConvex;
  }
  return FaceStatus::Ok;
}

template <class F>
struct MeshReport {
  std::vector<std::pair<int, FaceStatus>> face_failures;
  std::vector<std::pair<int, int>> combinatorial_failures;  // face pairs sharing too much
  bool ok() const { return face_failures.empty() && combinatorial_failures.empty(); }
};

/// Per-face flatness (rank of the homogenized vertex rows is 3) and strict
/// convexity (consecutive edge-pair orientations share a strict sign).
template <class F>
MeshReport<F> verify_flat_convex(const QuadMesh<F>& m) {
  MeshReport<F> rep;
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    FaceStatus st = face_status(m.vertices, m.faces[f]);
    if (st != FaceStatus::Ok) rep.face_failures.push_back({static_cast<int>(f), st});
  }
  return rep;
}

/// Combinatorial "intersect nicely": two faces share at most two vertices,
/// and a two-vertex share must be an edge of both cycles.
template <class F>
std::vector<std::pair<int, int>> mesh_nice_failures(const QuadMesh<F>& m) {
  std::vector<std::pair<int, int>> bad;
  auto is_edge = [](const std::array<int, 4>& f, int a, int b) {
    for (int i = 0; i < 4; ++i) {
      int u = f[i], v = f[(i + 1) % 4];
      if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
  };
  // vertex -> incident faces, so only candidate pairs are compared
  std::vector<std::vector<int>> incident(m.vertices.size());
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (int v : m.faces[f]) incident[v].push_back(static_cast<int>(f));
  std::set<std::pair<int, int>> pairs;
  for (const auto& fs : incident)
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) pairs.insert({fs[i], fs[j]});
  for (auto [fa, fb] : pairs) {
    std::vector<int> shared;
    for (int v : m.faces[fa])
      for (int w : m.faces[fb])
        if (v == w) shared.push_back(v);
    if (shared.size() > 2 ||
        (shared.size() == 2 && !(is_edge(m.faces[fa], shared[0], shared[1]) &&
                                 is_edge(m.faces[fb], shared[0], shared[1]))))
      bad.push_back({fa, fb});
  }
  return bad;
}

/// Toblerone torus with one quadrilateral missing. The boundary cycle is the
/// missing face; every face is flat and convex and the five interior
/// vertices lie strictly on one side of the boundary plane.
template <class F>
struct Gadget {
  std::vector<Vec3<F>> vertices;               // 9, torus ids
  std::vector<std::array<int, 4>> faces;       // 8
  std::array<int, 4> boundary;                 // cycle of the missing face
  std::vector<int> interior;                   // the other 5 vertex ids
};

/// The shipped rational seed: three wedge prisms around the axis (1,1,1),
/// related by cyclically permuting coordinates. All nine torus faces are
/// flat and convex; the missing face is chosen so that the rest of the torus
/// lies strictly on one side of its plane.
Gadget<Rational> reference_gadget();

namespace surface_detail {

template <class F>
Vec3<F> from_rational(const Vec3<Rational>& v) {
  Vec3<F> out;
  for (int i = 0; i < 3; ++i) out(i) = F(v(i));
  return out;
}

template <class DA, class DB>
typename DA::Scalar dot3(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

}  // namespace surface_detail

namespace surface_detail {

/// Exact clipping of the line p0 + t d against a strictly convex planar
/// polygon (in the plane with normal n): the admissible closed t-interval,
/// or empty.
template <class F>
struct ClipInterval {
  bool empty = false;
  bool has_lo = false, has_hi = false;
  F lo{}, hi{};

  void bound_below(const F& t) {
    if (!has_lo || exact_sign(t - lo) > 0) {
      lo = t;
      has_lo = true;
    }
    normalize();
  }
  void bound_above(const F& t) {
    if (!has_hi || exact_sign(t - hi) < 0) {
      hi = t;
      has_hi = true;
    }
    normalize();
  }
  void normalize() {
    if (has_lo && has_hi && exact_sign(hi - lo) < 0) empty = true;
  }
};

template <class F>
ClipInterval<F> clip_line(const std::array<Vec3<F>, 4>& poly, const Vec3<F>& n, const Vec3<F>& p0,
                          const Vec3<F>& d) {
  ClipInterval<F> iv;
  for (int e = 0; e < 4 && !iv.empty; ++e) {
    const Vec3<F>& a = poly[e];
    const Vec3<F>& b = poly[(e + 1) % 4];
    Vec3<F> m = cross3(n, b - a);  // in-plane edge normal
    // orient inward using a vertex off the edge
    int s = exact_sign(dot3(m, poly[(e + 2) % 4] - a));
    if (s == 0) {
      iv.empty = true;  // degenerate polygon
      break;
    }
    if (s < 0)
      for (int c = 0; c < 3; ++c) m(c) = -m(c);
    F g0 = dot3(m, p0 - a);
    F g1 = dot3(m, d);
    int s1 = exact_sign(g1);
    if (s1 == 0) {
      if (exact_sign(g0) < 0) iv.empty = true;
    } else if (s1 > 0) {
      iv.bound_below(-g0 / g1);
    } else {
      iv.bound_above(-g0 / g1);
    }
  }
  return iv;
}

}  // namespace surface_detail

/// Exact pairwise face separation inside one gadget. Faces with distinct
/// non-parallel planes are compared on the intersection line of their
/// planes (complete for strictly convex quads): the two clipped intervals
/// must overlap in nothing, or exactly in the shared edge or vertex.
/// Parallel distinct planes are disjoint; coplanar pairs use in-plane
/// separation witnesses.
template <class F>
std::vector<std::pair<int, int>> gadget_geometry_failures(const Gadget<F>& g) {
  using surface_detail::clip_line;
  using surface_detail::dot3;
  std::vector<std::pair<int, int>> bad;
  auto face_pts = [&](int f) {
    std::array<Vec3<F>, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = g.vertices[g.faces[f][i]];
    return p;
  };
  for (std::size_t fa = 0; fa < g.faces.size(); ++fa)
    for (std::size_t fb = fa + 1; fb < g.faces.size(); ++fb) {
      std::vector<int> shared;
      for (int v : g.faces[fa])
        for (int w : g.faces[fb])
          if (v == w) shared.push_back(v);
      auto P = face_pts(static_cast<int>(fa));
      auto Q = face_pts(static_cast<int>(fb));
      Vec3<F> nP = cross3(P[1] - P[0], P[2] - P[0]);
      Vec3<F> nQ = cross3(Q[1] - Q[0], Q[2] - Q[0]);
      Vec3<F> d = cross3(nP, nQ);
      bool ok = false;
      if (!(is_exact_zero(d(0)) && is_exact_zero(d(1)) && is_exact_zero(d(2)))) {
        // distinct planes meeting in a line: compare the clipped intervals
        Vec3<F> p0;
        {
          Mat<F> sys(2, 4);
          for (int c = 0; c < 3; ++c) {
            sys(0, c) = nP(c);
            sys(1, c) = nQ(c);
          }
          sys(0, 3) = dot3(nP, P[0]);
          sys(1, 3) = dot3(nQ, Q[0]);
          auto rr = rref(sys);
          p0.setConstant(F(0));
          for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
            p0(rr.pivot_cols[r]) = rr.m(static_cast<Eigen::Index>(r), 3);
        }
        auto ip = clip_line(P, nP, p0, d);
        auto iq = clip_line(Q, nQ, p0, d);
        // intersect the two intervals
        surface_detail::ClipInterval<F> both;
        both.empty = ip.empty || iq.empty;
        if (!both.empty) {
          if (ip.has_lo) both.bound_below(ip.lo);
          if (iq.has_lo) both.bound_below(iq.lo);
          if (ip.has_hi) both.bound_above(ip.hi);
          if (iq.has_hi) both.bound_above(iq.hi);
        }
        if (shared.empty()) {
          ok = both.empty;
        } else {
          // the common interval must be exactly the shared simplex
          auto t_of = [&](const Vec3<F>& u) {
            for (int c = 0; c < 3; ++c)
              if (!is_exact_zero(d(c))) return (u(c) - p0(c)) / d(c);
            throw std::logic_error("zero direction");
          };
          if (shared.size() == 1) {
            F t = t_of(g.vertices[shared[0]]);
            ok = !both.empty && both.has_lo && both.has_hi && both.lo == t && both.hi == t;
          } else {
            F t1 = t_of(g.vertices[shared[0]]);
            F t2 = t_of(g.vertices[shared[1]]);
            if (exact_sign(t2 - t1) < 0) std::swap(t1, t2);
            ok = !both.empty && both.has_lo && both.has_hi && both.lo == t1 && both.hi == t2;
          }
        }
      } else {
        // parallel planes
        bool same_plane = is_exact_zero(dot3(nP, Q[0] - P[0]));
        if (!same_plane) {
          ok = shared.empty();  // strictly apart
        } else if (shared.size() == 2) {
          // coplanar hinge: the other vertices strictly opposite sides of
          // the edge line
          Vec3<F> dir = g.vertices[shared[1]] - g.vertices[shared[0]];
          Vec3<F> axis = cross3(nP, dir);
          int sp = 0, sq = 0;
          bool strict = true;
          for (auto& x : P) {
            int s = exact_sign(dot3(axis, x - g.vertices[shared[0]]));
            if (s != 0) {
              if (sp == 0) sp = s;
              strict = strict && s == sp;
            }
          }
          for (auto& y : Q) {
            int s = exact_sign(dot3(axis, y - g.vertices[shared[0]]));
            if (s != 0) {
              if (sq == 0) sq = s;
              strict = strict && s == sq;
            }
          }
          ok = strict && sp != 0 && sq != 0 && sp != sq;
        } else {
          // coplanar, at most one shared vertex: separating in-plane line,
          // through the shared vertex when there is one
          std::vector<Vec3<F>> axes;
          for (int i = 0; i < 4; ++i) axes.push_back(cross3(nP, P[(i + 1) % 4] - P[i]));
          for (int j = 0; j < 4; ++j) axes.push_back(cross3(nQ, Q[(j + 1) % 4] - Q[j]));
          for (auto& a : axes) {
            if (is_exact_zero(a(0)) && is_exact_zero(a(1)) && is_exact_zero(a(2))) continue;
            Vec3<F> base = shared.empty() ? P[0] : g.vertices[shared[0]];
            auto classify = [&](const std::array<Vec3<F>, 4>& poly) {
              int sgn = 0;
              bool strict = true;
              for (auto& x : poly) {
                int s = exact_sign(dot3(a, x - base));
                if (s == 0) {
                  bool at_base = is_exact_zero(x(0) - base(0)) && is_exact_zero(x(1) - base(1)) &&
                                 is_exact_zero(x(2) - base(2));
                  strict = strict && (!shared.empty() && at_base);
                  continue;
                }
                if (sgn == 0) sgn = s;
                strict = strict && s == sgn;
              }
              return strict ? sgn : 0;
            };
            if (shared.empty()) {
              // strict separation, base on one polygon: use dot thresholds
              bool lt = true, gt = true;
              for (auto& x : P)
                for (auto& y : Q) {
                  int s = exact_sign(dot3(a, x - y));
                  lt = lt && s < 0;
                  gt = gt && s > 0;
                }
              if (lt || gt) {
                ok = true;
                break;
              }
            } else {
              int sp = classify(P), sq = classify(Q);
              if (sp != 0 && sq != 0 && sp != sq) {
                ok = true;
                break;
              }
            }
          }
        }
      }
      if (!ok) bad.push_back({static_cast<int>(fa), static_cast<int>(fb)});
    }
  return bad;
}

/// Maps the reference gadget onto a prescribed flat convex quadrilateral by
/// a 3-space projective transformation; `side` (+1/-1) selects the halfspace
/// of the target plane, measured against the normal induced by the corner
/// order, that must contain the gadget interior. Retries with the alternate
/// auxiliary frame before failing.
template <class F>
Gadget<F> gadget_on_quad(const std::array<Vec3<F>, 4>& target, int side) {
  using surface_detail::dot3;
  using surface_detail::from_rational;
  if (side != 1 && side != -1) throw std::invalid_argument("gadget_on_quad: side must be +1 or -1");
  {
    std::vector<Vec3<F>> tv(target.begin(), target.end());
    if (face_status(tv, {0, 1, 2, 3}) != FaceStatus::Ok)
      throw std::invalid_argument("gadget_on_quad: target quad is not flat and strictly convex");
  }
  Gadget<Rational> ref = reference_gadget();
  std::array<Vec3<F>, 4> src;
  for (int k = 0; k < 4; ++k) src[k] = from_rational<F>(ref.vertices[ref.boundary[k]]);
  Vec3<F> nu = cross3(target[1] - target[0], target[2] - target[0]);

  // The planar frame map can push far-off-plane points across infinity, so
  // the reference gadget is first pulled toward the centre of its boundary
  // quad by a homology fixing the boundary plane pointwise (exact, corners
  // untouched); stronger pulls are tried until every verdict holds.
  auto fs = pg_detail::quad_frame(src);
  Mat<F> bs = pg_detail::frame_basis(fs);
  Mat<F> bs_inv = pg_detail::invert4(bs);
  // frame coordinates of the reference vertices; interior heights share a sign
  std::array<Vec4<F>, 9> frame_coords;
  for (int v = 0; v < 9; ++v) {
    Vec3<F> p = from_rational<F>(ref.vertices[v]);
    Vec4<F> h;
    for (int c = 0; c < 3; ++c) h(c) = p(c);
    h(3) = F(1);
    for (int r = 0; r < 4; ++r) {
      F acc = F(0);
      for (int c = 0; c < 4; ++c) acc = acc + bs_inv(r, c) * h(c);
      frame_coords[v](r) = acc;
    }
  }
  int sigma = exact_sign(frame_coords[ref.interior.front()](3) / frame_coords[ref.interior.front()](0));
  // centre of the boundary quad in frame coordinates
  F cx = (F(0) + F(1) + fs.corner2d(2, 1) + F(0)) / F(4);
  F cy = (F(0) + F(0) + fs.corner2d(2, 2) + F(1)) / F(4);

  std::array<Mat<F>, 2> maps = {quad_space_map(src, target, F(1)),
                                quad_space_map(src, target, F(-1))};
  std::string last_err = "gadget_on_quad: no admissible frame";
  for (long k : {1L, 4L, 16L, 64L, 256L, 1024L, 4096L}) {
    // homology with axis z = 0 and centre (1, cx, cy, sigma), ratio k
    Vec4<F> centre;
    centre(0) = F(1);
    centre(1) = cx;
    centre(2) = cy;
    centre(3) = F(sigma);
    for (const auto& M : maps) {
      Gadget<F> out;
      out.boundary = ref.boundary;
      out.interior = ref.interior;
      out.faces = ref.faces;
      out.vertices.resize(9);
      bool finite = true;
      for (int v = 0; v < 9 && finite; ++v) {
        Vec4<F> fc = frame_coords[v];
        // squash: fc += (k-1)/sigma * z * centre
        F t = F(k - 1) * fc(3) / F(sigma);
        for (int r = 0; r < 4; ++r) fc(r) = fc(r) + t * centre(r);
        // back to space coordinates, then the target map
        Vec4<F> h;
        for (int r = 0; r < 4; ++r) {
          F acc = F(0);
          for (int c = 0; c < 4; ++c) acc = acc + bs(r, c) * fc(c);
          h(r) = acc;
        }
        Vec4<F> y;
        for (int r = 0; r < 4; ++r) {
          F acc = F(0);
          for (int c = 0; c < 4; ++c) acc = acc + M(r, c) * h(c);
          y(r) = acc;
        }
        if (is_exact_zero(y(3))) {
          finite = false;
          last_err = "gadget_on_quad: transform sends a gadget vertex to infinity";
          break;
        }
        F inv = F(1) / y(3);
        for (int c = 0; c < 3; ++c) out.vertices[v](c) = y(c) * inv;
      }
      if (!finite) continue;
      // corners must land exactly on the target corners in order
      bool corners = true;
      for (int k4 = 0; k4 < 4; ++k4)
        for (int c = 0; c < 3; ++c)
          corners = corners && out.vertices[ref.boundary[k4]](c) == target[k4](c);
      if (!corners) {
        last_err = "gadget_on_quad: corner correspondence failed";
        continue;
      }
      bool side_ok = true;
      for (int v : out.interior) {
        int s = exact_sign(dot3(nu, out.vertices[v] - target[0]));
        side_ok = side_ok && s == side;
      }
      if (!side_ok) {
        last_err = "gadget_on_quad: interior landed on the wrong side";
        continue;
      }
      bool faces_ok = true;
      for (const auto& f : out.faces) faces_ok = faces_ok && face_status(out.vertices, f) == FaceStatus::Ok;
      if (!faces_ok) {
        last_err = "gadget_on_quad: a mapped face lost flatness or convexity";
        continue;
      }
      return out;
    }
  }
  throw std::domain_error(last_err);
}

/// Glue one gadget onto an existing mesh quad (given by vertex ids, corner
/// order defining the orientation); adds the five interior vertices and the
/// eight faces.
template <class F>
void glue_gadget(QuadMesh<F>& mesh, const std::array<int, 4>& quad_ids, int side,
                 const std::string& tag_prefix) {
  std::array<Vec3<F>, 4> target;
  for (int k = 0; k < 4; ++k) target[k] = mesh.vertices[quad_ids[k]];
  Gadget<F> g = gadget_on_quad(target, side);
  std::map<int, int> vid;
  for (int k = 0; k < 4; ++k) vid[g.boundary[k]] = quad_ids[k];
  int t = 0;
  for (int v : g.interior) {
    int id = mesh.add_vertex(g.vertices[v]);
    vid[v] = id;
    mesh.tags[tag_prefix + ".i" + std::to_string(t++)] = id;
  }
  for (const auto& f : g.faces)
    mesh.faces.push_back({vid.at(f[0]), vid.at(f[1]), vid.at(f[2]), vid.at(f[3])});
}

/// Standard black/grey gluing quads of the nine-point configuration
/// (indices into a..i = 0..8): black adih, bfid, cgfe above the plane, grey
/// bdhi, bfge, cegi below.
struct S48Quads {
  std::vector<std::array<int, 4>> black = {{0, 3, 8, 7}, {1, 5, 8, 3}, {2, 6, 5, 4}};
  std::vector<std::array<int, 4>> grey = {{1, 3, 7, 8}, {1, 5, 6, 4}, {2, 4, 6, 8}};
};

/// Glue the six gadgets of one S48 block onto nine existing coplanar mesh
/// vertices. `above` is the global plane side that the black gadgets get.
template <class F>
void glue_s48(QuadMesh<F>& mesh, const std::array<int, 9>& ids, const S48Quads& quads,
              const std::string& tag_prefix) {
  std::array<Vec3<F>, 9> p;
  for (int i = 0; i < 9; ++i) p[i] = mesh.vertices[ids[i]];
  Mat<F> hom(9, 4);
  for (int i = 0; i < 9; ++i) {
    hom(i, 0) = F(1);
    for (int c = 0; c < 3; ++c) hom(i, c + 1) = p[i](c);
  }
  if (rank(hom) != 3) throw std::invalid_argument("s48: the nine special points must span a plane");
  // plane normal from the first non-collinear triple
  Vec3<F> nu_H;
  bool have = false;
  for (int i = 0; i < 9 && !have; ++i)
    for (int j = i + 1; j < 9 && !have; ++j)
      for (int k = j + 1; k < 9 && !have; ++k) {
        Vec3<F> n = cross3(p[j] - p[i], p[k] - p[i]);
        if (!(is_exact_zero(n(0)) && is_exact_zero(n(1)) && is_exact_zero(n(2)))) {
          nu_H = n;
          have = true;
        }
      }
  if (!have) throw std::invalid_argument("s48: special points are collinear");
  auto glue_list = [&](const std::vector<std::array<int, 4>>& qs, int global_side, const char* color) {
    int c = 0;
    for (const auto& q : qs) {
      std::array<int, 4> quad_ids = {ids[q[0]], ids[q[1]], ids[q[2]], ids[q[3]]};
      std::array<Vec3<F>, 4> corners;
      for (int k = 0; k < 4; ++k) corners[k] = mesh.vertices[quad_ids[k]];
      Vec3<F> nu_q = cross3(corners[1] - corners[0], corners[2] - corners[0]);
      int rel = exact_sign(surface_detail::dot3(nu_q, nu_H));
      if (rel == 0) throw std::invalid_argument("s48: degenerate gluing quad");
      glue_gadget(mesh, quad_ids, global_side * rel,
                  tag_prefix + "." + color + std::to_string(c++));
    }
  };
  glue_list(quads.black, +1, "black");
  glue_list(quads.grey, -1, "grey");
}

/// The parametric planar nine-point template (a..i) with anchors a, b, c
/// collinear on the line x = -2; valid (all six gluing quads strictly
/// convex) for every field value lambda >= 2.
template <class F>
std::array<std::array<F, 2>, 9> s48_template_2d(const F& lambda) {
  auto q = [](long n, long d) { return Rational(n, d); };
  std::array<std::array<F, 2>, 9> pts;
  pts[0] = {F(-2), F(2) * lambda};        // a
  pts[1] = {F(-2), F(2)};                 // b
  pts[2] = {F(-2), F(-2)};                // c
  pts[3] = {F(q(-5, 2)), F(4)};           // d
  pts[4] = {F(-4), F(q(-3, 2))};          // e
  pts[5] = {F(q(-3, 2)), F(q(1, 2))};     // f
  pts[6] = {F(q(-3, 2)), F(0)};           // g
  pts[7] = {F(q(5, 2)), F(q(-7, 2))};     // h
  pts[8] = {F(q(-1, 2)), F(-1)};          // i
  return pts;
}

/// Standalone partial surface S48: 48 faces, 39 vertices, the nine special
/// vertices tagged a..i. Validates quad convexity and coplanarity.
template <class F>
QuadMesh<F> build_s48(const std::array<Vec3<F>, 9>& special, const S48Quads& quads = S48Quads()) {
  QuadMesh<F> mesh;
  std::array<int, 9> ids;
  static const char* names = "abcdefghi";
  for (int i = 0; i < 9; ++i) {
    ids[i] = mesh.add_vertex(special[i]);
    mesh.tags[std::string(1, names[i])] = ids[i];
  }
  // validate the six quads before any gluing
  for (const auto& group : {quads.black, quads.grey})
    for (const auto& q : group) {
      std::array<int, 4> f = {ids[q[0]], ids[q[1]], ids[q[2]], ids[q[3]]};
      if (face_status(mesh.vertices, f) != FaceStatus::Ok)
        throw std::invalid_argument("s48: a gluing quad is not flat and strictly convex");
    }
  glue_s48(mesh, ids, quads, "s48");
  return mesh;
}

/// Glue an S144 block onto three existing collinear mesh vertices.
template <class F>
void glue_s144(QuadMesh<F>& mesh, const std::array<int, 3>& anchor_ids, const std::string& tag_prefix) {
  using surface_detail::dot3;
  std::array<Vec3<F>, 3> anchor;
  for (int i = 0; i < 3; ++i) anchor[i] = mesh.vertices[anchor_ids[i]];
  // pick the role permutation with ratio >= 2; always possible for three
  // distinct collinear points
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::optional<std::array<int, 3>> chosen;  // maps (role a, role b, role c) -> anchor index
  F rho{};
  for (const auto& perm : perms) {
    const Vec3<F>&A = anchor[perm[0]], &B = anchor[perm[1]], &C = anchor[perm[2]];
    Vec3<F> w = B - C;
    int k = -1;
    for (int c = 0; c < 3; ++c)
      if (!is_exact_zero(w(c))) {
        k = c;
        break;
      }
    if (k < 0) throw std::invalid_argument("s144: anchors not distinct");
    F r = (A(k) - C(k)) / w(k);
    // exact collinearity of the anchors
    for (int c = 0; c < 3; ++c)
      if (!is_exact_zero(A(c) - C(c) - r * w(c)))
        throw std::invalid_argument("s144: anchors are not collinear");
    if (exact_sign(r - F(2)) >= 0) {
      chosen = perm;
      rho = r;
      break;
    }
  }
  if (!chosen) throw std::invalid_argument("s144: no admissible anchor role assignment");
  const Vec3<F>& C = anchor[(*chosen)[2]];
  Vec3<F> w = anchor[(*chosen)[1]] - C;
  F lambda = F(2) * rho - F(1);
  int k0 = -1;
  for (int c = 0; c < 3; ++c)
    if (!is_exact_zero(w(c))) {
      k0 = c;
      break;
    }
  std::array<Vec3<F>, 2> basis;
  {
    int t = 0;
    for (int c = 0; c < 3; ++c) {
      if (c == k0) continue;
      Vec3<F> e;
      e.setConstant(F(0));
      e(c) = F(1);
      basis[t++] = e;
    }
  }
  std::array<Vec3<F>, 3> plane_dir = {basis[0], basis[1], basis[0] + basis[1]};
  auto templ = s48_template_2d<F>(lambda);
  for (int copy = 0; copy < 3; ++copy) {
    auto embed = [&](const std::array<F, 2>& xy) {
      // (x, y) -> C + ((y+2)/4) w + (x+2) m_copy
      F s = (xy[1] + F(2)) / F(4);
      F t = xy[0] + F(2);
      Vec3<F> out;
      for (int c = 0; c < 3; ++c) out(c) = C(c) + s * w(c) + t * plane_dir[copy](c);
      return out;
    };
    std::array<int, 9> ids;
    // roles a, b, c map back to the caller's anchors via the permutation
    ids[0] = anchor_ids[(*chosen)[0]];
    ids[1] = anchor_ids[(*chosen)[1]];
    ids[2] = anchor_ids[(*chosen)[2]];
    static const char* names = "abcdefghi";
    for (int i = 3; i < 9; ++i) {
      int id = mesh.add_vertex(embed(templ[i]));
      ids[i] = id;
      mesh.tags[tag_prefix + ".copy" + std::to_string(copy) + "." + std::string(1, names[i])] = id;
    }
    // the embedding must reproduce the anchors exactly
    for (int i = 0; i < 3; ++i) {
      Vec3<F> got = embed(templ[i]);
      for (int c = 0; c < 3; ++c)
        if (!(got(c) == mesh.vertices[ids[i]](c)))
          throw std::logic_error("s144: anchor embedding mismatch");
    }
    glue_s48(mesh, ids, S48Quads(), tag_prefix + ".copy" + std::to_string(copy));
  }
}

/// Three copies of S48 in three planes through the anchor line, identified
/// at the collinear anchors a, b, c: 144 faces, 111 vertices.
template <class F>
QuadMesh<F> build_s144(const std::array<Vec3<F>, 3>& anchors) {
  QuadMesh<F> mesh;
  std::array<int, 3> aid;
  static const char* names = "abc";
  for (int i = 0; i < 3; ++i) {
    aid[i] = mesh.add_vertex(anchors[i]);
    mesh.tags[std::string(1, names[i])] = aid[i];
  }
  glue_s144(mesh, aid, "s144");
  return mesh;
}

enum class TripleMode { All, PerLine };

/// The pentagon surface: one S144 glued onto each collinear triple of
/// the eleven-point pentagon configuration realized over Q(sqrt 5). With
/// TripleMode::All every 3-subset of every prescribed line gets a copy (25);
/// with PerLine one copy per line (10).
QuadMesh<QuadExt> build_pentagon_surface(TripleMode mode);

/// Decimal string of an exact value, correctly rounded (half up) to the
/// given number of fraction digits.
std::string decimal_string(const Rational& x, int digits);
std::string decimal_string(const QuadExt& x, int digits);

template <class F>
std::string export_obj(const QuadMesh<F>& m, int digits) {
  std::string out = "# " + std::to_string(m.vertices.size()) + " vertices, " +
                    std::to_string(m.faces.size()) + " faces\n";
  for (const auto& v : m.vertices) {
    out += "v";
    for (int c = 0; c < 3; ++c) out += " " + decimal_string(v(c), digits);
    out += "\n";
  }
  for (const auto& f : m.faces) {
    out += "f";
    for (int c = 0; c < 4; ++c) out += " " + std::to_string(f[c] + 1);
    out += "\n";
  }
  return out;
}

}  // namespace nonrat
