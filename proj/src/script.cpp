#include "nonrat/script.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "nonrat/linalg.hpp"

namespace nonrat {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      bool alpha_only = true;
      while (j < line.size()) {
        char w = line[j];
        if (w == '-') {
          // keep "require-collinear" one token, but never glue '-' onto
          // numbers or mixed words (it is subtraction there)
          if (alpha_only && j + 1 < line.size() &&
              std::isalpha(static_cast<unsigned char>(line[j + 1]))) {
            ++j;
            continue;
          }
          break;
        }
        if (!(std::isalnum(static_cast<unsigned char>(w)) || w == '_')) break;
        if (!std::isalpha(static_cast<unsigned char>(w))) alpha_only = false;
        ++j;
      }
      out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
      i = j;
      continue;
    }
    out.push_back({std::string(1, c), static_cast<int>(i + 1)});
    ++i;
  }
  return out;
}

// recursive-descent parser for polynomial expressions in 'a'
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t pos, int line_no)
      : t_(toks), p_(pos), line_(line_no) {}

  Poly parse_expr() {
    Poly acc = parse_term();
    while (peek() == "+" || peek() == "-") {
      std::string op = next().text;
      Poly rhs = parse_term();
      acc = (op == "+") ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  std::size_t pos() const { return p_; }

  [[noreturn]] void fail(const std::string& msg) const {
    int col = p_ < t_.size() ? t_[p_].column : (t_.empty() ? 1 : t_.back().column + 1);
    throw ScriptError({line_, col, msg});
  }

 private:
  Poly parse_term() {
    Poly acc = parse_factor();
    while (peek() == "*") {
      next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    if (peek() == "^") {
      next();
      std::string e = next().text;
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail("expected integer exponent");
      long n = std::stol(e);
      Poly r(1);
      for (long i = 0; i < n; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly parse_atom() {
    if (peek() == "-") {
      next();
      return -parse_atom();
    }
    if (peek() == "+") {
      next();
      return parse_atom();
    }
    if (peek() == "(") {
      next();
      Poly e = parse_expr();
      if (peek() != ")") fail("expected ')'");
      next();
      return e;
    }
    if (peek() == "a") {
      next();
      return Poly::variable();
    }
    std::string tok = peek();
    if (!tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0]))) {
      if (!std::all_of(tok.begin(), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail("bad number '" + tok + "'");
      next();
      mpz_class num(tok);
      if (peek() == "/") {
        next();
        std::string den = next().text;
        if (den.empty() || !std::isdigit(static_cast<unsigned char>(den[0]))) fail("expected denominator");
        return Poly(Rational(num, mpz_class(den)));
      }
      return Poly(Rational(num, mpz_class(1)));
    }
    fail("expected expression");
  }

  std::string peek() const { return p_ < t_.size() ? t_[p_].text : std::string(); }
  const Token& next() {
    if (p_ >= t_.size()) fail("unexpected end of line");
    return t_[p_++];
  }

  const std::vector<Token>& t_;
  std::size_t p_;
  int line_;
};

std::vector<Poly> parse_tuple(const std::vector<Token>& toks, std::size_t& pos, int line_no) {
  auto fail = [&](const std::string& m) -> void {
    int col = pos < toks.size() ? toks[pos].column : 1;
    throw ScriptError({line_no, col, m});
  };
  if (pos >= toks.size() || toks[pos].text != "(") fail("expected '('");
  ++pos;
  std::vector<Poly> out;
  for (int k = 0; k < 3; ++k) {
    ExprParser ep(toks, pos, line_no);
    out.push_back(ep.parse_expr());
    pos = ep.pos();
    std::string want = k < 2 ? "," : ")";
    if (pos >= toks.size() || toks[pos].text != want) fail("expected '" + want + "'");
    ++pos;
  }
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

ConstructionScript ConstructionScript::parse(const std::string& text) {
  ConstructionScript script;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int basis_count = 0;
  std::set<std::string> points, lines;
  auto get_name = [&](const std::vector<Token>& toks, std::size_t& pos, int ln) {
    if (pos >= toks.size())
      throw ScriptError({ln, toks.empty() ? 1 : toks.back().column + 1, "expected a name"});
    if (!is_name(toks[pos].text)) throw ScriptError({ln, toks[pos].column, "expected a name"});
    return toks[pos++].text;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    Statement st;
    st.line_no = line_no;
    std::size_t pos = 1;
    const std::string head = toks[0].text;
    auto require_point = [&](const std::string& nm, int col) {
      if (!points.count(nm)) throw ScriptError({line_no, col, "undefined point '" + nm + "'"});
    };
    auto require_line = [&](const std::string& nm, int col) {
      if (!lines.count(nm)) throw ScriptError({line_no, col, "undefined line '" + nm + "'"});
    };
    auto def_point = [&](const std::string& nm, int col) {
      if (points.count(nm) || lines.count(nm))
        throw ScriptError({line_no, col, "name '" + nm + "' already defined"});
      points.insert(nm);
    };
    auto def_line = [&](const std::string& nm, int col) {
      if (points.count(nm) || lines.count(nm))
        throw ScriptError({line_no, col, "name '" + nm + "' already defined"});
      lines.insert(nm);
    };
    if (head == "basis") {
      st.kind = Statement::Basis;
      if (++basis_count > 1) throw ScriptError({line_no, toks[0].column, "more than one basis statement"});
      for (int k = 0; k < 4; ++k) {
        int col = pos < toks.size() ? toks[pos].column : 1;
        std::string nm = get_name(toks, pos, line_no);
        def_point(nm, col);
        st.names.push_back(nm);
        if (pos < toks.size() && toks[pos].text == "(")
          st.tuples.push_back(parse_tuple(toks, pos, line_no));
      }
      if (!st.tuples.empty() && st.tuples.size() != 4)
        throw ScriptError({line_no, toks[0].column, "basis needs coordinates for all four points or none"});
    } else if (head == "param") {
      st.kind = Statement::Param;
      int col = pos < toks.size() ? toks[pos].column : 1;
      std::string nm = get_name(toks, pos, line_no);
      def_point(nm, col);
      st.names.push_back(nm);
      st.tuples.push_back(parse_tuple(toks, pos, line_no));
    } else if (head == "line") {
      st.kind = Statement::Line;
      int col0 = pos < toks.size() ? toks[pos].column : 1;
      std::string nm = get_name(toks, pos, line_no);
      for (int k = 0; k < 2; ++k) {
        int col = pos < toks.size() ? toks[pos].column : 1;
        std::string p = get_name(toks, pos, line_no);
        require_point(p, col);
        st.names.push_back(p);
      }
      def_line(nm, col0);
      st.names.insert(st.names.begin(), nm);
    } else if (head == "point") {
      st.kind = Statement::Point;
      int col0 = pos < toks.size() ? toks[pos].column : 1;
      std::string nm = get_name(toks, pos, line_no);
      for (int k = 0; k < 2; ++k) {
        int col = pos < toks.size() ? toks[pos].column : 1;
        std::string l = get_name(toks, pos, line_no);
        require_line(l, col);
        st.names.push_back(l);
      }
      def_point(nm, col0);
      st.names.insert(st.names.begin(), nm);
    } else if (head == "require-collinear") {
      st.kind = Statement::Require;
      for (int k = 0; k < 3; ++k) {
        int col = pos < toks.size() ? toks[pos].column : 1;
        std::string p = get_name(toks, pos, line_no);
        require_point(p, col);
        st.names.push_back(p);
      }
    } else {
      throw ScriptError({line_no, toks[0].column, "unknown statement '" + head + "'"});
    }
    if (pos != toks.size())
      throw ScriptError({line_no, toks[pos].column, "unexpected trailing token '" + toks[pos].text + "'"});
    script.statements.push_back(std::move(st));
  }
  if (basis_count != 1) throw ScriptError({line_no, 1, "script needs exactly one basis statement"});
  return script;
}

namespace {

Vec3<RatFunc> to_point(const std::vector<Poly>& tuple) {
  Vec3<RatFunc> v;
  for (int i = 0; i < 3; ++i) v(i) = RatFunc(tuple[i]);
  if (v(0).is_zero() && v(1).is_zero() && v(2).is_zero())
    throw std::domain_error("script: zero coordinate tuple");
  return v;
}

/// Clear denominators, remove the polynomial gcd and the rational content,
/// and make the leading coefficient of the first nonzero coordinate
/// positive. Canonical representative of the projective point.
Vec3<RatFunc> normalize_point(const Vec3<RatFunc>& v) {
  Poly den(1);
  for (int i = 0; i < 3; ++i)
    if (!v(i).is_zero()) den = den * v(i).den();
  std::array<Poly, 3> p;
  for (int i = 0; i < 3; ++i) p[i] = (v(i) * RatFunc(den)).num();
  Poly g;
  for (int i = 0; i < 3; ++i)
    if (!p[i].is_zero()) g = g.is_zero() ? p[i] : gcd(g, p[i]);
  if (!g.is_zero())
    for (int i = 0; i < 3; ++i) p[i] = p[i].divmod(g).first;
  // joint rational content
  mpz_class den_lcm = 1, num_gcd = 0;
  for (int i = 0; i < 3; ++i)
    for (const auto& c : p[i].coeffs()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
      den_lcm = l;
    }
  for (int i = 0; i < 3; ++i)
    for (const auto& c : p[i].coeffs()) {
      mpz_class n = c.num() * den_lcm / c.den();
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      num_gcd = gg;
    }
  if (num_gcd != 0) {
    Rational s = Rational(den_lcm, num_gcd).abs();
    for (int i = 0; i < 3; ++i) p[i] = p[i].scaled(s);
  }
  int sign = 0;
  for (int i = 0; i < 3 && sign == 0; ++i)
    if (!p[i].is_zero()) sign = p[i].leading().sign();
  Vec3<RatFunc> out;
  for (int i = 0; i < 3; ++i) out(i) = RatFunc(sign < 0 ? -p[i] : p[i]);
  return out;
}

int numeric_suffix(const std::string& s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  if (i == s.size() || i == 0) return -1;  // no digits, or digits only
  if (s[i] == '0' && i + 1 < s.size()) return -1;
  if (s.size() - i > 6) return -1;  // unreasonably large index: fall back to definition order
  return std::stoi(s.substr(i));
}

}  // namespace

RunResult run_construction(const ConstructionScript& s) {
  std::map<std::string, Vec3<RatFunc>> pts;
  std::map<std::string, Vec3<RatFunc>> lns;
  std::vector<std::string> point_order;
  std::vector<std::string> line_order;
  std::vector<std::array<std::string, 3>> requirements;

  for (const auto& st : s.statements) {
    switch (st.kind) {
      case Statement::Basis: {
        std::vector<std::vector<Poly>> tuples = st.tuples;
        if (tuples.empty()) {
          tuples = {{Poly(1), Poly(0), Poly(0)},
                    {Poly(0), Poly(1), Poly(0)},
                    {Poly(0), Poly(0), Poly(1)},
                    {Poly(1), Poly(1), Poly(1)}};
        }
        for (int k = 0; k < 4; ++k) {
          pts[st.names[k]] = normalize_point(to_point(tuples[k]));
          point_order.push_back(st.names[k]);
        }
        break;
      }
      case Statement::Param:
        pts[st.names[0]] = normalize_point(to_point(st.tuples[0]));
        point_order.push_back(st.names[0]);
        break;
      case Statement::Line: {
        const auto& p = pts.at(st.names[1]);
        const auto& q = pts.at(st.names[2]);
        Vec3<RatFunc> l = cross3(p, q);
        if (l(0).is_zero() && l(1).is_zero() && l(2).is_zero())
          throw std::domain_error("script line " + std::to_string(st.line_no) +
                                  ": join of projectively equal points '" + st.names[1] + "', '" + st.names[2] + "'");
        lns[st.names[0]] = normalize_point(l);
        line_order.push_back(st.names[0]);
        break;
      }
      case Statement::Point: {
        const auto& l = lns.at(st.names[1]);
        const auto& m = lns.at(st.names[2]);
        Vec3<RatFunc> p = cross3(l, m);
        if (p(0).is_zero() && p(1).is_zero() && p(2).is_zero())
          throw std::domain_error("script line " + std::to_string(st.line_no) +
                                  ": meet of projectively equal lines '" + st.names[1] + "', '" + st.names[2] + "'");
        pts[st.names[0]] = normalize_point(p);
        point_order.push_back(st.names[0]);
        break;
      }
      case Statement::Require:
        requirements.push_back({st.names[0], st.names[1], st.names[2]});
        break;
    }
  }

  RunResult out;
  // order points by numeric suffix when the suffixes cover 1..n exactly
  {
    std::vector<std::pair<int, std::string>> keyed;
    std::set<int> seen;
    bool ok = true;
    for (const auto& nm : point_order) {
      int k = numeric_suffix(nm);
      if (k < 1 || seen.count(k)) {
        ok = false;
        break;
      }
      seen.insert(k);
      keyed.push_back({k, nm});
    }
    ok = ok && !keyed.empty() && *seen.rbegin() == static_cast<int>(keyed.size());
    if (ok) {
      std::sort(keyed.begin(), keyed.end());
      out.point_names.clear();
      for (auto& [k, nm] : keyed) out.point_names.push_back(nm);
    } else {
      out.point_names = point_order;
    }
  }
  const int n = static_cast<int>(out.point_names.size());
  std::map<std::string, int> index;  // 1-based
  for (int i = 0; i < n; ++i) index[out.point_names[i]] = i + 1;

  out.coords.resize(n, 3);
  for (int i = 0; i < n; ++i) out.coords.row(i) = pts.at(out.point_names[i]).transpose();

  // requirement numerators
  Poly constraint(1);
  for (const auto& req : requirements) {
    Mat<RatFunc> t(3, 3);
    for (int i = 0; i < 3; ++i) t.row(i) = pts.at(req[i]).transpose();
    RatFunc d = determinant(t);
    if (d.is_zero()) continue;  // incidence forced by construction
    Poly num = d.num().primitive();
    if (num.degree() == 0)
      throw std::domain_error("script: requirement on '" + req[0] + "','" + req[1] + "','" + req[2] +
                              "' is unsatisfiable for every parameter value");
    bool dup = false;
    for (const auto& prev : out.requirement_polys) dup = dup || Poly::same_up_to_scalar(prev, num);
    if (!dup) {
      out.requirement_polys.push_back(num);
      constraint = constraint * num;
    }
  }
  out.constraint = constraint.primitive();

  // derived abstract configuration: identical incidences plus requirements
  std::vector<std::set<int>> members;
  for (const auto& ln : line_order) {
    std::set<int> m;
    const auto& l = lns.at(ln);
    for (const auto& nm : out.point_names) {
      const auto& p = pts.at(nm);
      RatFunc dot = l(0) * p(0) + l(1) * p(1) + l(2) * p(2);
      if (dot.is_zero()) m.insert(index.at(nm));
    }
    members.push_back(std::move(m));
  }
  for (const auto& req : requirements) {
    std::set<int> tri = {index.at(req[0]), index.at(req[1]), index.at(req[2])};
    bool placed = false;
    for (auto& m : members) {
      int hit = 0;
      for (int p : tri) hit += m.count(p);
      if (hit >= 2) {
        for (int p : tri) m.insert(p);
        placed = true;
        break;
      }
    }
    if (!placed) members.push_back(tri);
  }
  out.derived_config.n = n;
  std::set<std::vector<int>> uniq;
  for (const auto& m : members) {
    if (m.size() < 3) continue;
    std::vector<int> v(m.begin(), m.end());
    if (uniq.insert(v).second) out.derived_config.lines.push_back(v);
  }
  out.derived_config.labels = out.point_names;
  out.derived_config.validate();
  return out;
}

NonrationalityCertificate derive_nonrationality(const ConstructionScript& s) {
  RunResult run = run_construction(s);
  NonrationalityCertificate cert;
  cert.constraint = run.constraint;
  cert.configuration = run.derived_config;
  if (run.constraint.degree() != 2)
    throw std::domain_error("derive_nonrationality: constraint has degree " +
                            std::to_string(run.constraint.degree()) + ", only quadratic constraints are supported");
  cert.rational_roots = rational_root_test(run.constraint);
  if (!cert.rational_roots.empty())
    throw std::domain_error("derive_nonrationality: constraint has rational root " +
                            (cert.rational_roots.front().is_integer()
                                 ? cert.rational_roots.front().num().get_str()
                                 : cert.rational_roots.front().str()) +
                            "; the configuration is realizable over Q");
  // discriminant of the primitive quadratic
  Rational A = run.constraint.coeff(2), B = run.constraint.coeff(1), C = run.constraint.coeff(0);
  Rational disc = B * B - Rational(4) * A * C;
  if (disc.sign() < 0)
    throw std::domain_error("derive_nonrationality: negative discriminant, no real realization");
  mpz_class D = disc.num();  // primitive coefficients are integral
  mpz_class k = 1, rem = D;
  for (mpz_class p = 2; p * p <= rem; ++p) {
    while (rem % (p * p) == 0) {
      rem /= p * p;
      k *= p;
    }
  }
  if (!rem.fits_slong_p())
    throw std::domain_error("derive_nonrationality: discriminant radicand out of range");
  cert.radicand = rem.get_si();
  // plus branch: (-B + k sqrt(d)) / (2A)
  Rational twoA = Rational(2) * A;
  cert.root = QuadExt(-B / twoA, Rational(k) / twoA, cert.radicand);
  const int n = static_cast<int>(run.coords.rows());
  cert.realization.resize(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 3; ++j) cert.realization(i, j) = run.coords(i, j).eval(cert.root);
  cert.report = verify_realization(cert.configuration, cert.realization);
  return cert;
}

const std::string& pentagon11_script() {
  static const std::string text = R"(# Extended pentagon configuration, eleven points and ten lines.
# Projective frame on the four points v1, v2, v9, v10; v3 carries the free
# parameter along the line v9 v10. The centre of the figure is v4.
basis v1 (1,0,-1)  v2 (1,0,1)  v9 (1,-1,0)  v10 (1,1,0)
param v3 (1, a, 0)
line l1 v9 v10
line l2 v1 v2
line l3 v1 v3
line l4 v2 v9
line l5 v1 v9
line l6 v2 v10
point v4 l5 l6
point v11 l1 l2
line l7 v4 v11
point v6 l3 l7
line l8 v10 v6
point v7 l2 l8
line l9 v3 v4
point v5 l4 l9
point v8 l3 l4
require-collinear v5 v10 v7
require-collinear v4 v7 v8
)";
  return text;
}

const std::string& pentagon9_script() {
  static const std::string text = R"(# Nine-point restriction of the extended pentagon: points p6 and p11 of the
# eleven-point figure deleted, the remaining points renumbered 1..9 (old
# p7,p8,p9,p10 become v6,v7,v8,v9).
basis v1 (1,0,-1)  v2 (1,0,1)  v8 (1,-1,0)  v9 (1,1,0)
param v3 (1, a, 0)
line l1 v8 v9
line l2 v1 v2
line l3 v1 v3
line l4 v2 v8
line l5 v1 v8
line l6 v2 v9
point v4 l5 l6
line l7 v3 v4
point v5 l4 l7
line l8 v9 v5
point v6 l2 l8
point v7 l3 l4
require-collinear v4 v6 v7
)";
  return text;
}

const std::string& rational_square_script() {
  static const std::string text = R"(# Control configuration whose constraint factors over Q: the requirement
# forces a^2 = 4, so the parameter has the rational solutions +-2.
basis b1 b2 b3 b4
param p (1, a, 2)
param q (1, 2, a)
param r (2, 1, -1)
require-collinear p q r
)";
  return text;
}

}  // namespace nonrat
