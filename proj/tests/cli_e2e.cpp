// Drives the installed CLI binary end to end through a shell, checking exit
// codes and artifact files. The binary path comes in argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace fs = std::filesystem;

namespace {
int failures = 0;

int run(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

void expect(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) ++failures;
}
}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_e2e <path-to-nonrat>\n");
    return 2;
  }
  std::string bin = argv[1];
  fs::path dir = fs::temp_directory_path() / "nonrat_e2e";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string d = dir.string();

  expect(run(bin + " derive pentagon11 -o " + d + "/p.json > " + d + "/derive.log") == 0,
         "derive pentagon11 exits 0");
  expect(fs::exists(d + "/p.json"), "realization written");

  expect(run(bin + " derive square -o " + d + "/sq.json > " + d + "/sq.log 2>&1") == 1,
         "derive square exits 1 (rational root)");

  // malformed script: parse error -> exit 2
  {
    FILE* f = std::fopen((d + "/bad.cfg").c_str(), "w");
    std::fputs("basis v1 v2\n", f);
    std::fclose(f);
    expect(run(bin + " derive " + d + "/bad.cfg -o " + d + "/x.json > /dev/null 2>&1") == 2,
           "malformed script exits 2");
  }

  expect(run(bin + " lift " + d + "/p.json -o " + d + "/l.json > /dev/null") == 0, "lift exits 0");
  expect(run(bin + " lift " + d + "/p.json -o " + d + "/l23.json --heights 2,3 > /dev/null") == 0,
         "lift with custom heights");
  expect(run(bin + " certify " + d + "/l.json -o " + d + "/c.json > " + d + "/cert.log") == 0,
         "certify exits 0");
  expect(run(bin + " recover " + d + "/l.json -o " + d + "/r.json > /dev/null") == 0,
         "recover exits 0");
  expect(run(bin + " surface gadget -o " + d + "/gadget > /dev/null") == 0, "surface gadget");
  expect(fs::exists(d + "/gadget.obj") && fs::exists(d + "/gadget.exact.json"),
         "gadget artifacts written");
  expect(run(bin + " surface s48 -o " + d + "/s48 --precision 8 > /dev/null") == 0, "surface s48");
  expect(run(bin + " surface pentagon --triples per-line -o " + d + "/pent > " + d + "/pent.log") == 0,
         "surface pentagon per-line");
  {
    std::ifstream log(d + "/pent.log");
    std::string all((std::istreambuf_iterator<char>(log)), std::istreambuf_iterator<char>());
    expect(all.find("1440 faces") != std::string::npos, "pentagon per-line face count reported");
    expect(all.find("field Q(sqrt 5)") != std::string::npos, "pentagon field tag reported");
  }

  fs::remove_all(dir);
  if (failures) {
    std::printf("%d e2e checks FAILED\n", failures);
    return 1;
  }
  std::printf("cli e2e passed\n");
  return 0;
}
