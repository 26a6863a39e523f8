#include "doctest.h"
#include "nonrat/script.hpp"

using namespace nonrat;

namespace {

Poly pentagon_poly() {
  // a^2 - 4a - 1
  return Poly(std::vector<Rational>{Rational(-1), Rational(-4), Rational(1)});
}

RatFunc rf(long c) { return RatFunc(c); }

bool proj_equal_row(const Mat<RatFunc>& coords, int row, std::initializer_list<RatFunc> want) {
  Mat<RatFunc> two(2, 3);
  two.row(0) = coords.row(row);
  int c = 0;
  for (const auto& w : want) two(1, c++) = w;
  return rank(two) == 1;
}

// substitute a rational parameter value into the symbolic coordinates
MatQ substitute(const Mat<RatFunc>& coords, const Rational& a) {
  MatQ out(coords.rows(), coords.cols());
  for (Eigen::Index i = 0; i < coords.rows(); ++i)
    for (Eigen::Index j = 0; j < coords.cols(); ++j) out(i, j) = coords(i, j).eval(a);
  return out;
}

}  // namespace

TEST_CASE("pentagon script reproduces the classical derivation") {
  ConstructionScript script = ConstructionScript::parse(pentagon11_script());
  RunResult run = run_construction(script);
  REQUIRE(run.point_names.size() == 11);
  // intermediates, up to scale
  RatFunc a = RatFunc::variable();
  CHECK(proj_equal_row(run.coords, 3, {rf(0), rf(1), rf(-1)}));               // v4
  CHECK(proj_equal_row(run.coords, 6, {rf(1), rf(0), RatFunc() - a}));        // v7 = (1,0,-a)
  CHECK(proj_equal_row(run.coords, 7, {rf(1) - a, rf(2) * a, rf(1) + a}));    // v8
  CHECK(proj_equal_row(run.coords, 10, {rf(1), rf(0), rf(0)}));               // v11
  CHECK(proj_equal_row(run.coords, 5, {rf(1) + a, a, RatFunc() - a}));        // v6
  CHECK(proj_equal_row(run.coords, 4, {rf(2), a - rf(1), a + rf(1)}));        // v5
  // the constraint
  CHECK(Poly::same_up_to_scalar(run.constraint, pentagon_poly()));
  CHECK(run.constraint == pentagon_poly());  // primitive normalization
  // both requirements reduce to the same polynomial
  REQUIRE(run.requirement_polys.size() == 1);
  // the derived configuration is exactly pentagon11
  AbstractConfiguration expect = pentagon11();
  CHECK(run.derived_config.n == expect.n);
  auto sorted = [](std::vector<std::vector<int>> ls) {
    for (auto& l : ls) std::sort(l.begin(), l.end());
    std::sort(ls.begin(), ls.end());
    return ls;
  };
  CHECK(sorted(run.derived_config.lines) == sorted(expect.lines));
}

TEST_CASE("pentagon9 script gives the same constraint") {
  ConstructionScript script = ConstructionScript::parse(pentagon9_script());
  RunResult run = run_construction(script);
  CHECK(run.point_names.size() == 9);
  CHECK(Poly::same_up_to_scalar(run.constraint, pentagon_poly()));
  auto sorted = [](std::vector<std::vector<int>> ls) {
    for (auto& l : ls) std::sort(l.begin(), l.end());
    std::sort(ls.begin(), ls.end());
    return ls;
  };
  CHECK(sorted(run.derived_config.lines) == sorted(pentagon9().lines));
}

TEST_CASE("derive_nonrationality on the pentagon") {
  ConstructionScript script = ConstructionScript::parse(pentagon11_script());
  NonrationalityCertificate cert = derive_nonrationality(script);
  CHECK(cert.radicand == 5);
  CHECK(cert.rational_roots.empty());
  // root a = 2 + sqrt(5)
  CHECK(cert.root == QuadExt(Rational(2), Rational(1), 5));
  CHECK(cert.report.empty());
  CHECK(cert.realization.rows() == 11);
}

TEST_CASE("both constraint roots satisfy the prescribed collinearities") {
  ConstructionScript script = ConstructionScript::parse(pentagon11_script());
  RunResult run = run_construction(script);
  for (int branch : {1, -1}) {
    QuadExt root(Rational(2), Rational(branch), 5);  // 2 +- sqrt 5
    CHECK(run.constraint.eval(root).is_zero());
    MatE pts(run.coords.rows(), 3);
    for (Eigen::Index i = 0; i < run.coords.rows(); ++i)
      for (int j = 0; j < 3; ++j) pts(i, j) = run.coords(i, j).eval(root);
    auto rep = verify_realization(run.derived_config, pts);
    CHECK(rep.collinearity_failures.empty());
  }
}

TEST_CASE("derive_nonrationality on pentagon9") {
  ConstructionScript script = ConstructionScript::parse(pentagon9_script());
  NonrationalityCertificate cert = derive_nonrationality(script);
  CHECK(cert.radicand == 5);
  CHECK(cert.report.empty());
}

TEST_CASE("rational control script fails with the rational root named") {
  ConstructionScript script = ConstructionScript::parse(rational_square_script());
  RunResult run = run_construction(script);
  CHECK(Poly::same_up_to_scalar(run.constraint,
                                Poly(std::vector<Rational>{Rational(-4), Rational(0), Rational(1)})));
  try {
    derive_nonrationality(script);
    FAIL("expected a rational-root error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("rational root 2") != std::string::npos);
  }
}

TEST_CASE("non-quadratic constraints are reported as unsupported") {
  // det(e1, e3, (1,a,2)) = -a: a linear constraint
  std::string linear = R"(basis b1 b2 b3 b4
param p (1, a, 2)
require-collinear b1 b3 p
)";
  RunResult run = run_construction(ConstructionScript::parse(linear));
  CHECK(run.constraint.degree() == 1);
  try {
    derive_nonrationality(ConstructionScript::parse(linear));
    FAIL("expected a degree error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("degree") != std::string::npos);
  }
}

TEST_CASE("constant nonzero requirements are unsatisfiable") {
  // det(e1, e2, (1,a,2)) = 2 for every parameter value
  std::string impossible = R"(basis b1 b2 b3 b4
param p (1, a, 2)
require-collinear b1 b2 p
)";
  try {
    run_construction(ConstructionScript::parse(impossible));
    FAIL("expected an unsatisfiable-requirement error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("unsatisfiable") != std::string::npos);
  }
}

TEST_CASE("forced incidences give the empty constraint") {
  // the requirement repeats a constructed incidence
  std::string text = R"(basis v1 v2 v3 v4
param v5 (1, a, 0)
line l1 v1 v2
line l2 v3 v4
point v6 l1 l2
require-collinear v1 v2 v6
)";
  RunResult run = run_construction(ConstructionScript::parse(text));
  CHECK(run.constraint == Poly(1));
  CHECK(run.requirement_polys.empty());
}

TEST_CASE("constraint is independent of statement interleaving") {
  // the pentagon script with independent statements reordered
  std::string reordered = R"(basis v1 (1,0,-1)  v2 (1,0,1)  v9 (1,-1,0)  v10 (1,1,0)
param v3 (1, a, 0)
line l5 v1 v9
line l6 v2 v10
line l2 v1 v2
line l1 v9 v10
line l4 v2 v9
line l3 v1 v3
point v4 l5 l6
point v11 l1 l2
line l9 v3 v4
point v5 l4 l9
line l7 v4 v11
point v6 l3 l7
line l8 v10 v6
point v7 l2 l8
point v8 l3 l4
require-collinear v4 v7 v8
require-collinear v5 v10 v7
)";
  RunResult run = run_construction(ConstructionScript::parse(reordered));
  CHECK(Poly::same_up_to_scalar(run.constraint, pentagon_poly()));
}

TEST_CASE("parser reports line and column") {
  try {
    ConstructionScript::parse("basis v1 v2 v3 v4\nline l1 v1 vX\n");
    FAIL("expected a parse error");
  } catch (const ScriptError& e) {
    CHECK(e.err.line == 2);
    CHECK(e.err.column == 12);
    CHECK(std::string(e.what()).find("undefined point") != std::string::npos);
  }
  CHECK_THROWS_AS(ConstructionScript::parse("point p l1 l2\n"), ScriptError);
  CHECK_THROWS_AS(ConstructionScript::parse("basis v1 v2 v3\n"), ScriptError);
  CHECK_THROWS_AS(ConstructionScript::parse("basis v1 v2 v3 v4\nparam p (1, a)\n"), ScriptError);
  CHECK_THROWS_AS(ConstructionScript::parse("frobnicate x\n"), ScriptError);
  CHECK_THROWS_AS(ConstructionScript::parse(""), ScriptError);
}

TEST_CASE("degenerate joins are rejected at run time") {
  std::string text = R"(basis v1 v2 v3 v4
param v5 (1, 0, 0)
line l1 v1 v5
)";
  CHECK_THROWS_AS(run_construction(ConstructionScript::parse(text)), std::domain_error);
}

TEST_CASE("every 8-point restriction of pentagon9 is realizable over Q") {
  // one derivation script per deleted point; in each the construction closes
  // with no requirement, so the parameter stays free and any collapse-free
  // rational value realizes the restricted configuration
  struct Restriction {
    int deleted;
    const char* script;
  };
  const std::vector<Restriction> restrictions = {
      {1, R"(basis v2 v3 v4 v6
line lI v3 v4
param v5 (0, 1, a)
line lE v5 v6
line lG v2 v4
point v9 lE lG
line lA v3 v9
line lH v4 v6
line lD v2 v5
point v8 lA lD
point v7 lD lH
)"},
      {2, R"(basis v1 v3 v5 v6
line lC v1 v3
param v7 (1, a, 0)
line lD v5 v7
line lE v5 v6
line lH v6 v7
line lI v3 v5
point v4 lH lI
line lF v1 v4
point v8 lD lF
line lA v3 v8
point v9 lA lE
)"},
      {3, R"(basis v1 v2 v4 v5
line lB v1 v2
param v6 (1, a, 0)
line lD v2 v5
line lF v1 v4
point v8 lD lF
line lG v2 v4
line lE v5 v6
point v9 lE lG
line lH v4 v6
point v7 lD lH
)"},
      {4, R"(basis v1 v2 v8 v9
line lA v8 v9
param v3 (1, 1, a)
line lD v2 v8
param v5 (0, 1, 2)
line lB v1 v2
line lC v1 v3
point v7 lC lD
line lE v5 v9
point v6 lB lE
)"},
      {5, R"(basis v1 v2 v3 v4
line lC v1 v3
param v7 (1, 0, a)
line lD v2 v7
line lF v1 v4
point v8 lD lF
line lA v3 v8
line lG v2 v4
point v9 lA lG
line lH v4 v7
line lB v1 v2
point v6 lB lH
)"},
      {6, R"(basis v1 v2 v3 v4
line lI v3 v4
param v5 (1, 1, a)
line lD v2 v5
line lC v1 v3
point v7 lC lD
line lF v1 v4
point v8 lD lF
line lA v3 v8
line lG v2 v4
point v9 lA lG
)"},
      {7, R"(basis v1 v2 v3 v4
line lI v3 v4
param v5 (1, 1, a)
line lD v2 v5
line lF v1 v4
point v8 lD lF
line lA v3 v8
line lG v2 v4
point v9 lA lG
line lE v5 v9
line lB v1 v2
point v6 lB lE
)"},
      {8, R"(basis v1 v2 v3 v4
line lC v1 v3
param v7 (1, 0, a)
line lD v2 v7
line lI v3 v4
point v5 lD lI
line lH v4 v7
line lB v1 v2
point v6 lB lH
line lE v5 v6
line lG v2 v4
point v9 lE lG
)"},
      {9, R"(basis v1 v2 v3 v4
line lC v1 v3
param v7 (1, 0, a)
line lD v2 v7
line lI v3 v4
point v5 lD lI
line lF v1 v4
point v8 lD lF
line lH v4 v7
line lB v1 v2
point v6 lB lH
)"},
  };
  AbstractConfiguration nine = pentagon9();
  for (const auto& r : restrictions) {
    CAPTURE(r.deleted);
    // expected line-size multiset of the restriction
    std::multiset<std::size_t> expect_sizes;
    for (const auto& line : nine.lines) {
      std::size_t s = line.size() - std::count(line.begin(), line.end(), r.deleted);
      if (s >= 3) expect_sizes.insert(s);
    }
    RunResult run = run_construction(ConstructionScript::parse(r.script));
    CHECK(run.constraint == Poly(1));  // no surviving constraint
    CHECK(run.point_names.size() == 8);
    std::multiset<std::size_t> got_sizes;
    for (const auto& line : run.derived_config.lines) got_sizes.insert(line.size());
    CHECK(got_sizes == expect_sizes);
    // find a rational parameter value realizing it without collapse
    bool realized = false;
    for (long cand : {3, 4, 5, 7, 9, 11, 13, -3, -5}) {
      MatQ pts = substitute(run.coords, Rational(cand));
      auto rep = verify_realization(run.derived_config, pts);
      if (rep.collinearity_failures.empty() && rep.collapse_failures.empty() &&
          rep.coincidence_failures.empty()) {
        realized = true;
        break;
      }
    }
    CHECK(realized);
  }
}
