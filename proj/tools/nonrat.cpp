#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nonrat/cli_ops.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact non-rational configurations, Lawrence polytopes and polyhedral surfaces"};
  app.require_subcommand(1);

  std::string script, out = "realization.json", field;
  auto* derive = app.add_subcommand(
      "derive", "run a construction script and derive the non-rationality certificate");
  derive->add_option("script", script, "script file, or bundled: pentagon11|pentagon9|square")
      ->required();
  derive->add_option("-o,--out", out, "realization JSON output")->capture_default_str();

  std::string lift_in, lift_out = "lifting.json", heights = "1,2";
  auto* lift = app.add_subcommand("lift", "Lawrence lifting of a realization");
  lift->add_option("realization", lift_in, "realization JSON")->required();
  lift->add_option("-o,--out", lift_out, "lifting JSON output")->capture_default_str();
  lift->add_option("--heights", heights, "lifting heights h1,h2 (rationals, 0 < h1 < h2)")
      ->capture_default_str();
  lift->add_option("--field", field, "expected field tag of the input");

  std::string cert_in, cert_out = "certificates.json";
  auto* certify = app.add_subcommand("certify", "edge and facet certificates of a lifting");
  certify->add_option("lifting", cert_in, "lifting JSON")->required();
  certify->add_option("-o,--out", cert_out, "certificates JSON output")->capture_default_str();
  certify->add_option("--field", field, "expected field tag of the input");

  std::string rec_in, rec_out = "recovered.json";
  auto* recover = app.add_subcommand("recover", "recover the configuration from a labeled polytope");
  recover->add_option("lifting", rec_in, "lifting JSON")->required();
  recover->add_option("-o,--out", rec_out, "recovered realization JSON output")->capture_default_str();
  recover->add_option("--field", field, "expected field tag of the input");

  std::string target, prefix = "surface", triples = "all";
  int precision = 6;
  auto* surface = app.add_subcommand("surface", "build and verify a polyhedral surface");
  surface->add_option("target", target, "gadget|s48|s144|pentagon")->required();
  surface->add_option("-o,--out-prefix", prefix, "output prefix for .obj and .exact.json")
      ->capture_default_str();
  surface->add_option("--triples", triples, "pentagon gluing: all|per-line")->capture_default_str();
  surface->add_option("--precision", precision, "decimal digits in the OBJ export")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  nonrat::CommandOutcome outcome;
  try {
    if (*derive) {
      outcome = nonrat::cmd_derive(nonrat::load_script_text(script), out);
    } else if (*lift) {
      auto comma = heights.find(',');
      if (comma == std::string::npos) {
        std::cerr << "--heights needs h1,h2\n";
        return 1;
      }
      outcome = nonrat::cmd_lift(lift_in, lift_out, nonrat::Rational::parse(heights.substr(0, comma)),
                                 nonrat::Rational::parse(heights.substr(comma + 1)), field);
    } else if (*certify) {
      outcome = nonrat::cmd_certify(cert_in, cert_out, field);
    } else if (*recover) {
      outcome = nonrat::cmd_recover(rec_in, rec_out, field);
    } else if (*surface) {
      nonrat::TripleMode mode =
          triples == "per-line" ? nonrat::TripleMode::PerLine : nonrat::TripleMode::All;
      if (triples != "per-line" && triples != "all") {
        std::cerr << "--triples must be all or per-line\n";
        return 1;
      }
      outcome = nonrat::cmd_surface(target, prefix, mode, precision);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cout << outcome.report;
  return outcome.exit_code;
}
