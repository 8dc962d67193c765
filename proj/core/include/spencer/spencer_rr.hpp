#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spencer/char_classes.hpp"
#include "spencer/lie_algebra.hpp"

namespace spencer {

/// Data of the complex Omega^k (x) Sym^k(G) on P^n.
struct SpencerComplexSpec {
  int base_dim = 0;
  BundleClass adjoint_bundle;
  std::optional<DualWeight> weight;
  /// Letter used for the symbolic parameter in printed values.
  std::string param = "a";

  SpencerComplexSpec(int n, BundleClass bundle, std::optional<DualWeight> lambda = std::nullopt,
                     std::string param_name = "a");

  RingDescriptor ring() const { return RingDescriptor{base_dim}; }
};

/// Rank 3, c_1 = 0, c_2 = a H^2 on P^n (n >= 2 for c_2 to survive).
BundleClass psu2_adjoint_bundle(int n, const ParamPoly& a = ParamPoly::parameter());

/// ch(Lambda^k T*P^n) ch(Sym^k G).
GradedElement term_class(const SpencerComplexSpec& spec, int k);

/// integral of term_class(k) td(P^n).
ParamPoly euler_char_degree(const SpencerComplexSpec& spec, int k);

/// sum_k (-1)^k term_class(k).
GradedElement alternating_chern(const SpencerComplexSpec& spec);

/// Alternating sum of euler_char_degree; compared against the integral of
/// alternating_chern * td and throws InternalError if they differ.
ParamPoly total_euler(const SpencerComplexSpec& spec);

struct EulerReport {
  std::vector<ParamPoly> per_degree;
  ParamPoly total;
  /// w_lambda and w_{-lambda}; absent without a weight or for degenerate Killing forms.
  std::optional<Rational> weight;
  std::optional<Rational> mirror_weight;
  bool mirror_equal = false;
};

EulerReport euler_report(const SpencerComplexSpec& spec);

/// Recomputes the pipeline with lambda -> -lambda and compares every output.
EulerReport mirror_compare(const SpencerComplexSpec& spec);

/// chi(P^n, O(d)) through HRR, checked against prod_{i=1}^n (d+i) / n!.
Rational hrr_line_bundle(int n, long d);

}  // namespace spencer
