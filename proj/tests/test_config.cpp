#include <random>

#include "doctest.h"
#include "nonrat/config.hpp"
#include "nonrat/json_io.hpp"
#include "nonrat/script.hpp"

using namespace nonrat;

namespace {
std::mt19937 rng(99);
Rational rr() {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  return Rational(num(rng), den(rng));
}
}  // namespace

TEST_CASE("pentagon11 structure") {
  AbstractConfiguration c = pentagon11();
  CHECK(c.n == 11);
  CHECK(c.lines.size() == 10);
  std::multiset<std::size_t> sizes;
  for (const auto& l : c.lines) sizes.insert(l.size());
  CHECK(sizes == std::multiset<std::size_t>({4, 4, 4, 4, 4, 3, 3, 3, 3, 3}));
  // Example's listed triples
  CHECK(c.triple_prescribed(1, 2, 7));
  CHECK(c.triple_prescribed(1, 3, 8));
  // every point on at least two lines
  for (int p = 1; p <= 11; ++p) {
    int deg = 0;
    for (const auto& l : c.lines) deg += std::count(l.begin(), l.end(), p);
    CHECK(deg >= 2);
  }
  CHECK(c.prescribed_triples().size() == 25);
}

TEST_CASE("pentagon9 is the induced restriction") {
  AbstractConfiguration c9 = pentagon9();
  CHECK(c9.n == 9);
  CHECK(c9.lines.size() == 9);
  // induced: every pentagon9 line maps back into a pentagon11 line under the
  // inverse renumbering (1..5 fixed, 6..9 -> 7..10)
  AbstractConfiguration c11 = pentagon11();
  auto back = [](int p) { return p <= 5 ? p : p + 1; };
  for (const auto& line : c9.lines) {
    bool found = false;
    for (const auto& big : c11.lines) {
      std::set<int> bigset(big.begin(), big.end());
      bool sub = true;
      for (int p : line) sub = sub && bigset.count(back(p));
      found = found || sub;
    }
    CHECK(found);
  }
}

TEST_CASE("verify_realization flags degenerate placements") {
  AbstractConfiguration c = pentagon11();
  // eleven distinct points on one line: prescribed collinearities hold but
  // everything else collapses
  MatQ on_line(11, 3);
  for (int i = 0; i < 11; ++i) {
    on_line(i, 0) = Rational(1);
    on_line(i, 1) = Rational(i);
    on_line(i, 2) = Rational(0);
  }
  auto rep = verify_realization(c, on_line);
  CHECK(rep.collinearity_failures.empty());
  CHECK(!rep.collapse_failures.empty());
  CHECK(rep.coincidence_failures.empty());
  CHECK(!rep.stability_failures.empty());

  // points placed at the vertices of a triangle: coincidences
  MatQ tri(11, 3);
  for (int i = 0; i < 11; ++i) {
    int k = i % 3;
    tri(i, 0) = Rational(1);
    tri(i, 1) = Rational(k == 1);
    tri(i, 2) = Rational(k == 2);
  }
  auto rep2 = verify_realization(c, tri);
  CHECK(!rep2.coincidence_failures.empty());
}

TEST_CASE("verify_realization is projectively invariant") {
  ConstructionScript script = ConstructionScript::parse(pentagon11_script());
  NonrationalityCertificate cert = derive_nonrationality(script);
  REQUIRE(cert.report.empty());
  for (int t = 0; t < 5; ++t) {
    MatE m(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = QuadExt(rr());
    } while (is_exact_zero(determinant(m)));
    MatE mapped = cert.realization * m.transpose();
    auto rep = verify_realization(cert.configuration, mapped);
    CHECK(rep.empty());
  }
}

TEST_CASE("emit_realization_system counts") {
  AbstractConfiguration three;
  three.n = 3;
  auto sys3 = emit_realization_system(three);
  CHECK(sys3.equations == 0);
  CHECK(sys3.inequalities == 1);

  AbstractConfiguration line3;
  line3.n = 3;
  line3.lines = {{1, 2, 3}};
  auto sysl = emit_realization_system(line3);
  CHECK(sysl.equations == 1);
  CHECK(sysl.inequalities == 0);

  auto sysp = emit_realization_system(pentagon11());
  CHECK(sysp.equations == 25);
  CHECK(sysp.inequalities == 140);
  // the declared counts appear in the text
  CHECK(sysp.text.find("eq: ") != std::string::npos);
  CHECK(sysp.text.find("ineq: ") != std::string::npos);
}

TEST_CASE("configuration json round trip") {
  AbstractConfiguration c = pentagon11();
  ordered_json j = configuration_to_json(c);
  AbstractConfiguration back = configuration_from_json(j);
  CHECK(back.n == c.n);
  CHECK(back.lines == c.lines);
  CHECK(back.labels == c.labels);
}

TEST_CASE("configuration validation rejects bad inputs") {
  AbstractConfiguration bad;
  bad.n = 4;
  bad.lines = {{1, 2, 3}, {1, 2, 4}};  // two lines sharing two points
  CHECK_THROWS(bad.validate());
  AbstractConfiguration small;
  small.n = 3;
  small.lines = {{1, 2}};
  CHECK_THROWS(small.validate());
}
