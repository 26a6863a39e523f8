#include "nonrat/surface.hpp"

#include <stdexcept>

namespace nonrat {

TobleroneAbstract toblerone_abstract() {
  TobleroneAbstract t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int r1 = (r + 1) % 3, c1 = (c + 1) % 3;
      t.faces.push_back({3 * r + c, 3 * r + c1, 3 * r1 + c1, 3 * r1 + c});
    }
  return t;
}

namespace {
Vec3<Rational> rvec(long x, long y, long z) {
  Vec3<Rational> v;
  v(0) = Rational(x);
  v(1) = Rational(y);
  v(2) = Rational(z);
  return v;
}
}  // namespace

Gadget<Rational> reference_gadget() {
  // Three wedge prisms around the axis (1,1,1); sigma cycles coordinates.
  // Torus vertex (k, j): j = 0,1,2 picks A,B,C; k = 0,1,2 the prism joint.
  // id = 3k + j, matching toblerone_abstract with rows = joints.
  auto sig = [](const Vec3<Rational>& v) {
    Vec3<Rational> w;
    w(0) = v(2);
    w(1) = v(0);
    w(2) = v(1);
    return w;
  };
  Vec3<Rational> A = rvec(1, 0, 0), B = rvec(3, 1, 1), C = rvec(2, 1, 1);
  Gadget<Rational> g;
  g.vertices.resize(9);
  for (int k = 0; k < 3; ++k) {
    g.vertices[3 * k + 0] = A;
    g.vertices[3 * k + 1] = B;
    g.vertices[3 * k + 2] = C;
    A = sig(A);
    B = sig(B);
    C = sig(C);
  }
  auto face = [](int k, int j0, int j1) -> std::array<int, 4> {
    int k1 = (k + 1) % 3;
    return {3 * k + j0, 3 * k + j1, 3 * k1 + j1, 3 * k1 + j0};
  };
  // all nine torus faces; the missing one is the AB face of prism 0, whose
  // plane has the remaining five vertices strictly on one side
  std::array<int, 4> missing = face(0, 0, 1);
  for (int k = 0; k < 3; ++k)
    for (auto [j0, j1] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
      std::array<int, 4> f = face(k, j0, j1);
      if (f == missing) continue;
      g.faces.push_back(f);
    }
  g.boundary = missing;
  {
    std::set<int> on_boundary(missing.begin(), missing.end());
    for (int v = 0; v < 9; ++v)
      if (!on_boundary.count(v)) g.interior.push_back(v);
  }
  // construction-time sanity: every face flat and strictly convex, interior
  // strictly one-sided
  for (const auto& f : g.faces)
    if (face_status(g.vertices, f) != FaceStatus::Ok)
      throw std::logic_error("reference_gadget: shipped face fails verification");
  if (face_status(g.vertices, g.boundary) != FaceStatus::Ok)
    throw std::logic_error("reference_gadget: boundary quad fails verification");
  Vec3<Rational> nu = cross3(g.vertices[missing[1]] - g.vertices[missing[0]],
                                       g.vertices[missing[2]] - g.vertices[missing[0]]);
  int side = 0;
  for (int v : g.interior) {
    Vec3<Rational> dv = g.vertices[v] - g.vertices[missing[0]];
    int s = (nu(0) * dv(0) + nu(1) * dv(1) + nu(2) * dv(2)).sign();
    if (s == 0 || (side != 0 && s != side)) throw std::logic_error("reference_gadget: interior not one-sided");
    side = s;
  }
  return g;
}

QuadMesh<QuadExt> build_pentagon_surface(TripleMode mode) {
  ConstructionScript script = ConstructionScript::parse(pentagon11_script());
  NonrationalityCertificate cert = derive_nonrationality(script);
  if (!cert.report.empty())
    throw std::logic_error("pentagon surface: realization failed verification");
  Dehomogenized<QuadExt> deh = dehomogenize(cert.realization);
  QuadMesh<QuadExt> mesh;
  std::vector<int> pid(cert.configuration.n);
  for (int i = 0; i < cert.configuration.n; ++i) {
    Vec3<QuadExt> v;
    v(0) = deh.affine(i, 0);
    v(1) = deh.affine(i, 1);
    v(2) = QuadExt(0);
    pid[i] = mesh.add_vertex(v);
    mesh.tags["p" + std::to_string(i + 1)] = pid[i];
  }
  int copy = 0;
  for (const auto& line : cert.configuration.lines) {
    std::vector<std::array<int, 3>> triples;
    std::vector<int> s(line.begin(), line.end());
    std::sort(s.begin(), s.end());
    if (mode == TripleMode::All) {
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          for (std::size_t k = j + 1; k < s.size(); ++k) triples.push_back({s[i], s[j], s[k]});
    } else {
      triples.push_back({s[0], s[1], s[2]});
    }
    for (const auto& t : triples) {
      std::array<int, 3> aid = {pid[t[0] - 1], pid[t[1] - 1], pid[t[2] - 1]};
      glue_s144(mesh, aid, "t" + std::to_string(copy++));
    }
  }
  return mesh;
}

namespace {

// floor of x * 10^digits + 1/2, exactly (round half up)
mpz_class rounded_scaled(const Rational& x, int digits) {
  mpz_class p10 = 1;
  for (int i = 0; i < digits; ++i) p10 *= 10;
  mpz_class num = x.num() * p10 * 2 + x.den();
  mpz_class den = x.den() * 2;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

mpz_class rounded_scaled(const QuadExt& x, int digits) {
  if (x.coef().is_zero()) return rounded_scaled(x.rat(), digits);
  mpz_class p10 = 1;
  for (int i = 0; i < digits; ++i) p10 *= 10;
  QuadExt y = x * QuadExt(Rational(p10)) + QuadExt(Rational(1, 2));
  // estimate with 512-bit floats, then fix up with exact comparisons
  mpf_set_default_prec(512);
  mpf_class fa(y.rat().num()), fad(y.rat().den()), fb(y.coef().num()), fbd(y.coef().den());
  mpf_class fd(static_cast<double>(y.radicand()));
  mpf_class est = fa / fad + (fb / fbd) * sqrt(fd);
  mpf_class fl = floor(est);
  mpz_class e;
  mpz_set_f(e.get_mpz_t(), fl.get_mpf_t());
  auto cmp = [&](const mpz_class& t) { return (y - QuadExt(Rational(t))).sign(); };
  while (cmp(e) < 0) e -= 1;
  while (cmp(e + 1) >= 0) e += 1;
  return e;
}

template <class T>
std::string decimal_impl(const T& x, int digits) {
  mpz_class r = rounded_scaled(x, digits);
  bool neg = r < 0;
  mpz_class a = neg ? mpz_class(-r) : r;
  mpz_class p10 = 1;
  for (int i = 0; i < digits; ++i) p10 *= 10;
  mpz_class ip = a / p10, fp = a % p10;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace

std::string decimal_string(const Rational& x, int digits) { return decimal_impl(x, digits); }
std::string decimal_string(const QuadExt& x, int digits) { return decimal_impl(x, digits); }

}  // namespace nonrat
