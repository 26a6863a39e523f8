#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nonrat/config.hpp"
#include "nonrat/quadext.hpp"
#include "nonrat/ratfunc.hpp"

namespace nonrat {

/// One statement of the construction DSL. The grammar is line oriented:
///
///   basis p1 (t,x,y) p2 (t,x,y) p3 (t,x,y) p4 (t,x,y)
///   basis p1 p2 p3 p4              # standard frame e1,e2,e3,e1+e2+e3
///   param p (expr, expr, expr)     # coordinates polynomial in a
///   line  L p q
///   point p L M
///   require-collinear p q r
///
/// '#' starts a comment; exactly one basis statement; a single free
/// parameter named 'a'.
struct Statement {
  enum Kind { Basis, Param, Line, Point, Require } kind;
  std::vector<std::string> names;       // operands in order
  std::vector<std::vector<Poly>> tuples;  // for Basis (4 of them) / Param (1)
  int line_no = 0;
};

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(const ParseError& e)
      : std::runtime_error("line " + std::to_string(e.line) + ", column " +
                           std::to_string(e.column) + ": " + e.message),
        err(e) {}
  ParseError err;
};

struct ConstructionScript {
  std::vector<Statement> statements;
  static ConstructionScript parse(const std::string& text);  // throws ScriptError
};

/// Output of running a script symbolically over the fraction field Q(a).
struct RunResult {
  std::vector<std::string> point_names;   // in configuration index order
  Mat<RatFunc> coords;                    // n x 3, entries polynomial in a
  Poly constraint;                        // primitive, positive leading coefficient
  std::vector<Poly> requirement_polys;    // the nontrivial requirement numerators, normalized
  AbstractConfiguration derived_config;   // lines implied identically plus requirements
};

/// Executes joins/meets symbolically over Q(a). Each require-collinear
/// contributes the numerator of its 3x3 determinant; the constraint is the
/// product of the distinct (up to scalar) nontrivial requirement numerators,
/// normalized to primitive integer form.
RunResult run_construction(const ConstructionScript& s);

struct NonrationalityCertificate {
  Poly constraint;
  std::vector<Rational> rational_roots;  // must be empty
  std::int64_t radicand = 0;             // square-free d with the roots in Q(sqrt d)
  QuadExt root;                          // the chosen root (plus branch)
  Mat<QuadExt> realization;              // n x 3 over Q(sqrt d)
  AbstractConfiguration configuration;
  VerificationReport report;             // empty for a valid certificate
};

/// Runs the construction, demands a quadratic constraint with no rational
/// root, extracts the radicand from the discriminant and substitutes the
/// plus-branch root, returning a fully verified realization.
NonrationalityCertificate derive_nonrationality(const ConstructionScript& s);

/// Bundled scripts.
const std::string& pentagon11_script();
const std::string& pentagon9_script();
const std::string& rational_square_script();

}  // namespace nonrat
