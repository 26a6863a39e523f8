#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "nonrat/cli_ops.hpp"

using namespace nonrat;
namespace fs = std::filesystem;

namespace {
struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("nonrat_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};
}  // namespace

TEST_CASE("derive / lift / certify / recover pipeline") {
  TempDir tmp;
  auto real_path = tmp / "pentagon.json";
  auto out = cmd_derive(load_script_text("pentagon11"), real_path);
  CHECK(out.exit_code == 0);
  CHECK(out.report.find("constraint: a^2 - 4*a - 1") != std::string::npos);
  CHECK(out.report.find("rational roots: none") != std::string::npos);
  CHECK(out.report.find("radicand d = 5") != std::string::npos);

  auto lift_path = tmp / "lifting.json";
  auto lifted = cmd_lift(real_path, lift_path, Rational(1), Rational(2));
  CHECK(lifted.exit_code == 0);
  CHECK(lifted.report.find("22 rows, 13 columns") != std::string::npos);

  auto certs = cmd_certify(lift_path, tmp / "certs.json");
  CHECK(certs.exit_code == 0);
  CHECK(certs.report.find("11 edge, 11 point-facet, 10 line-facet") != std::string::npos);
  CHECK(certs.report.find("all verified: yes") != std::string::npos);

  auto rec = cmd_recover(lift_path, tmp / "recovered.json");
  CHECK(rec.exit_code == 0);
  CHECK(rec.report.find("matches source") != std::string::npos);
}

TEST_CASE("derive reports parse errors with exit 2") {
  TempDir tmp;
  auto out = cmd_derive("basis v1 v2 v3\n", tmp / "r.json");
  CHECK(out.exit_code == 2);
  CHECK(out.report.find("parse error") != std::string::npos);
}

TEST_CASE("derive on the rational control exits 1 naming the root") {
  TempDir tmp;
  auto out = cmd_derive(load_script_text("square"), tmp / "r.json");
  CHECK(out.exit_code == 1);
  CHECK(out.report.find("rational root 2") != std::string::npos);
}

TEST_CASE("pentagon9 derive gives the same constraint") {
  TempDir tmp;
  auto out = cmd_derive(load_script_text("pentagon9"), tmp / "p9.json");
  CHECK(out.exit_code == 0);
  CHECK(out.report.find("constraint: a^2 - 4*a - 1") != std::string::npos);
}

TEST_CASE("recover on a corrupted facet label fails naming R") {
  TempDir tmp;
  auto real_path = tmp / "p.json";
  cmd_derive(load_script_text("pentagon11"), real_path);
  auto lift_path = tmp / "l.json";
  cmd_lift(real_path, lift_path, Rational(1), Rational(2));
  ordered_json j = ordered_json::parse(read_text_file(lift_path));
  j["facets"][0] = j["facets"][1];
  auto bad_path = tmp / "bad.json";
  write_text_file(bad_path, j.dump(2));
  auto rec = cmd_recover(bad_path, tmp / "out.json");
  CHECK(rec.exit_code == 1);
  CHECK(rec.report.find("R has dimension 4") != std::string::npos);
}

TEST_CASE("field expectation flag") {
  TempDir tmp;
  auto real_path = tmp / "p.json";
  cmd_derive(load_script_text("pentagon11"), real_path);
  auto ok = cmd_lift(real_path, tmp / "l.json", Rational(1), Rational(2), "Q(sqrt 5)");
  CHECK(ok.exit_code == 0);
  auto bad = cmd_lift(real_path, tmp / "l2.json", Rational(1), Rational(2), "Q");
  CHECK(bad.exit_code == 1);
  CHECK(bad.report.find("field mismatch") != std::string::npos);
}

TEST_CASE("surface commands") {
  TempDir tmp;
  auto g = cmd_surface("gadget", tmp / "gadget", TripleMode::All, 6);
  CHECK(g.exit_code == 0);
  CHECK(g.report.find("8 faces, 9 vertices") != std::string::npos);
  CHECK(g.report.find("boundary flat+convex") != std::string::npos);
  CHECK(fs::exists(tmp / "gadget.obj"));
  CHECK(fs::exists(tmp / "gadget.exact.json"));

  auto s48 = cmd_surface("s48", tmp / "s48", TripleMode::All, 6);
  CHECK(s48.exit_code == 0);
  CHECK(s48.report.find("48 faces, 39 vertices, special plane OK") != std::string::npos);

  auto s144 = cmd_surface("s144", tmp / "s144", TripleMode::All, 6);
  CHECK(s144.exit_code == 0);
  CHECK(s144.report.find("144 faces, 111 vertices, anchor line OK") != std::string::npos);

  auto unknown = cmd_surface("cube", tmp / "cube", TripleMode::All, 6);
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("commands are deterministic: identical artifact bytes") {
  TempDir tmp;
  cmd_derive(load_script_text("pentagon11"), tmp / "a.json");
  cmd_derive(load_script_text("pentagon11"), tmp / "b.json");
  CHECK(read_text_file(tmp / "a.json") == read_text_file(tmp / "b.json"));
  cmd_surface("s48", tmp / "sa", TripleMode::All, 6);
  cmd_surface("s48", tmp / "sb", TripleMode::All, 6);
  CHECK(read_text_file(tmp / "sa.obj") == read_text_file(tmp / "sb.obj"));
  CHECK(read_text_file(tmp / "sa.exact.json") == read_text_file(tmp / "sb.exact.json"));
}
