#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spencer/io.hpp"

namespace spencer {

/// One quantity of the reference P^2 computation: the published value, quoted
/// verbatim, next to the value computed here.
struct PaperRow {
  std::string quantity;
  std::string quote;
  std::string paper_value;
  std::string computed_value;
  bool match = false;

  friend bool operator==(const PaperRow&, const PaperRow&) = default;
};

struct PaperDiff {
  std::vector<PaperRow> rows;
  std::size_t matches() const;
  std::size_t mismatches() const { return rows.size() - matches(); }
};

/// Reference rows for P^2 with the PSU(2) adjoint bundle c_2 = a H^2. With a
/// constant `a` the published values are specialized before comparing.
PaperDiff verify_paper(const ParamPoly& a = ParamPoly::parameter());

struct CheckResult {
  std::string name;
  bool holds = false;
  nlohmann::json details;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct OutputReport {
  nlohmann::json inputs;
  std::vector<std::string> term_classes;
  std::string alternating_chern;
  std::vector<ParamPoly> per_degree;
  ParamPoly total;
  std::optional<Rational> weight;
  std::optional<Rational> mirror_weight;
  bool mirror_equal = false;
  std::vector<CheckResult> checks;
  std::vector<PaperRow> paper_diff;
  int exit_status = 0;

  nlohmann::json to_json() const;
  static OutputReport from_json(const nlohmann::json& j);
  friend bool operator==(const OutputReport&, const OutputReport&) = default;
};

OutputReport run_compute(const InputSpec& spec);

/// Operator-level report for one algebra and weight, Sym degrees up to max_degree.
nlohmann::json lie_report(const LieAlgebraData& algebra, const std::vector<Rational>& lambda, std::size_t max_degree);

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

std::string render_text(const OutputReport& report);
std::string render_text(const PaperDiff& diff);
nlohmann::json to_json(const PaperDiff& diff);
std::string render_lie_text(const nlohmann::json& report);

}  // namespace spencer
