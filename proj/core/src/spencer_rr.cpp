#include "spencer/spencer_rr.hpp"

#include <string>

namespace spencer {

namespace {

BundleClass cotangent(int n) {
  if (n == 0) return BundleClass::trivial(RingDescriptor{0}, 0);
  return dual(tangent_projective(n));
}

GradedElement base_todd(int n) {
  if (n == 0) return GradedElement::one(RingDescriptor{0});
  return todd_class(tangent_projective(n));
}

void check_degree(const SpencerComplexSpec& spec, int k) {
  if (k < 0 || k > spec.base_dim)
    throw ValidationError("degree " + std::to_string(k) + " outside 0.." + std::to_string(spec.base_dim));
}

std::optional<Rational> try_weight(const std::optional<DualWeight>& lambda) {
  if (!lambda) return std::nullopt;
  if (killing_form(lambda->algebra).determinant().is_zero()) return std::nullopt;
  return weight_function(*lambda);
}

}  // namespace

SpencerComplexSpec::SpencerComplexSpec(int n, BundleClass bundle, std::optional<DualWeight> lambda,
                                       std::string param_name)
    : base_dim(n), adjoint_bundle(std::move(bundle)), weight(std::move(lambda)), param(std::move(param_name)) {
  if (n < 0) throw ValidationError("base dimension must be nonnegative");
  if (adjoint_bundle.ring().dim != n)
    throw ValidationError("bundle lives on P^" + std::to_string(adjoint_bundle.ring().dim) + ", base is P^" +
                          std::to_string(n));
}

BundleClass psu2_adjoint_bundle(int n, const ParamPoly& a) {
  const RingDescriptor ring{n};
  return BundleClass::from_chern_numbers(ring, 3, {ParamPoly(0), a});
}

GradedElement term_class(const SpencerComplexSpec& spec, int k) {
  check_degree(spec, k);
  return chern_character(ext_power(cotangent(spec.base_dim), k)) *
         chern_character(sym_power(spec.adjoint_bundle, k));
}

ParamPoly euler_char_degree(const SpencerComplexSpec& spec, int k) {
  return integrate(term_class(spec, k) * base_todd(spec.base_dim));
}

GradedElement alternating_chern(const SpencerComplexSpec& spec) {
  GradedElement out(spec.ring());
  for (int k = 0; k <= spec.base_dim; ++k) {
    if (k % 2 == 0)
      out += term_class(spec, k);
    else
      out -= term_class(spec, k);
  }
  return out;
}

ParamPoly total_euler(const SpencerComplexSpec& spec) {
  ParamPoly by_degree;
  for (int k = 0; k <= spec.base_dim; ++k) {
    if (k % 2 == 0)
      by_degree += euler_char_degree(spec, k);
    else
      by_degree -= euler_char_degree(spec, k);
  }
  const ParamPoly by_class = integrate(alternating_chern(spec) * base_todd(spec.base_dim));
  if (by_degree != by_class)
    throw InternalError("total Euler characteristic disagrees: " + by_degree.to_string(spec.param) + " vs " +
                        by_class.to_string(spec.param));
  return by_degree;
}

EulerReport euler_report(const SpencerComplexSpec& spec) {
  EulerReport out;
  for (int k = 0; k <= spec.base_dim; ++k) out.per_degree.push_back(euler_char_degree(spec, k));
  out.total = total_euler(spec);
  out.weight = try_weight(spec.weight);
  return out;
}

EulerReport mirror_compare(const SpencerComplexSpec& spec) {
  EulerReport plus = euler_report(spec);
  SpencerComplexSpec mirrored = spec;
  if (mirrored.weight) mirrored.weight = -*mirrored.weight;
  const EulerReport minus = euler_report(mirrored);
  plus.mirror_weight = minus.weight;
  plus.mirror_equal = plus.per_degree == minus.per_degree && plus.total == minus.total && plus.weight == minus.weight;
  return plus;
}

Rational hrr_line_bundle(int n, long d) {
  if (n < 1) throw ValidationError("hrr_line_bundle needs n >= 1");
  const RingDescriptor ring{n};
  const Rational value = integrate(chern_character(BundleClass::line(ring, ParamPoly(Rational(d)))) *
                                   todd_class(tangent_projective(n)))
                             .constant();
  Rational closed(1);
  for (int i = 1; i <= n; ++i) closed *= Rational(d + i);
  closed /= factorial(n);
  if (value != closed)
    throw InternalError("HRR for O(" + std::to_string(d) + ") on P^" + std::to_string(n) + " gives " +
                        value.to_string() + ", closed form " + closed.to_string());
  return value;
}

}  // namespace spencer
