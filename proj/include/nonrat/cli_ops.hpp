#pragma once

#include <string>
#include <vector>

#include "nonrat/json_io.hpp"

namespace nonrat {

/// Result of one CLI command: exit status 0 iff every requested verification
/// passed (2 marks a script parse error), the human-readable report, and the
/// artifact files written.
struct CommandOutcome {
  int exit_code = 0;
  std::string report;
  std::vector<std::string> artifacts;
};

/// Resolve a script argument: a path, or one of the bundled names
/// "pentagon11", "pentagon9", "square".
std::string load_script_text(const std::string& path_or_name);

CommandOutcome cmd_derive(const std::string& script_text, const std::string& out_path);
CommandOutcome cmd_lift(const std::string& realization_path, const std::string& out_path,
                        const Rational& h1, const Rational& h2,
                        const std::string& expect_field = "");
CommandOutcome cmd_certify(const std::string& lifting_path, const std::string& certs_out_path,
                           const std::string& expect_field = "");
CommandOutcome cmd_recover(const std::string& lifting_path, const std::string& out_path,
                           const std::string& expect_field = "");
CommandOutcome cmd_surface(const std::string& target, const std::string& out_prefix,
                           TripleMode mode, int precision);

}  // namespace nonrat
