#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spencer/lie_algebra.hpp"
#include "spencer/spencer_rr.hpp"

namespace spencer {

/// Operator-level verifications a compute run can request.
enum class CheckKind { mirror, nilpotency, obstruction, perturbation, operator_difference };

const char* to_string(CheckKind c);

/// A validated compute request.
struct InputSpec {
  int projective = 0;
  BundleClass bundle;
  /// "psu2" for the builtin adjoint bundle, "explicit" otherwise.
  std::string bundle_kind;
  std::optional<LieAlgebraData> lie;
  std::optional<std::vector<Rational>> lambda;
  std::vector<CheckKind> checks;
  /// Largest Sym degree used by the operator checks.
  std::size_t max_degree = 2;
  /// Normalized copy of the document, echoed into reports.
  nlohmann::json echo;

  SpencerComplexSpec complex_spec() const;
  std::optional<DualWeight> weight() const;
};

/// Reads JSON, or TOML when the extension is .toml, into a JSON value.
nlohmann::json load_document(const std::filesystem::path& path);

/// Validates a document and builds the spec. Unknown keys, wrong types and
/// out-of-range values throw ValidationError carrying the JSON pointer of the
/// offending field.
InputSpec parse_input(const nlohmann::json& doc);

/// {"dim": n, "brackets": [[a, b, c, "r"], ...]} with 1-based indices, meaning
/// the coefficient of e_c in [e_a, e_b] is r. The partner [e_b, e_a] is filled
/// in as -r unless given explicitly. Also accepts {"builtin": "su2"}.
/// Validates antisymmetry and Jacobi.
LieAlgebraData parse_lie_document(const nlohmann::json& doc, const std::string& pointer = "");

/// Integer or "p/q" string.
Rational parse_json_rational(const nlohmann::json& value, const std::string& pointer);

/// "1,0,-1/2" -> rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

/// SPENCER_RR_MAX_DEGREE, default 4.
std::size_t max_degree_cap();

}  // namespace spencer
