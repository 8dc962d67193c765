#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spencer/lie_algebra.hpp"
#include "spencer/matrix.hpp"

namespace spencer {

/// How the extension operator is continued from generators to Sym^k.
///
/// unsigned_derivation: delta(u_1...u_k) = sum_i u_1..delta(u_i)..u_k. This is
///   well defined on the commutative symmetric product and is the default.
/// signed_ordered: the alternating rule sum_i (-1)^{i-1}(...), evaluated on the
///   sorted monomial representative. It depends on the factor order; see
///   leibniz_obstruction.
enum class LeibnizConvention { unsigned_derivation, signed_ordered };

const char* to_string(LeibnizConvention c);
LeibnizConvention parse_convention(const std::string& name);

/// Sparse element of Sym^k in the monomial basis.
using SymElement = std::map<SymBasis::Monomial, Rational>;

std::string format_sym_element(const SymElement& s);

/// Exact matrix Sym^domain_degree -> Sym^codomain_degree, rows and columns in
/// SymBasis order.
struct OperatorMatrix {
  std::size_t algebra_dim = 0;
  std::size_t domain_degree = 0;
  std::size_t codomain_degree = 0;
  Matrix matrix;

  SymBasis domain_basis() const { return SymBasis(algebra_dim, domain_degree); }
  SymBasis codomain_basis() const { return SymBasis(algebra_dim, codomain_degree); }
  /// Image of the i-th domain monomial.
  SymElement image_of(std::size_t column) const;

  OperatorMatrix operator-() const { return {algebra_dim, domain_degree, codomain_degree, -matrix}; }
  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

/// The symmetric bilinear form S(w_a, w_b) = 1/2 (<lambda,[e_a,[e_b,v]]> + <lambda,[e_b,[e_a,v]]>)
/// on generator pairs, as a dim x dim matrix.
Matrix delta_generator_form(const DualWeight& lambda, std::size_t generator);

/// delta(e_v) in Sym^2 monomial coordinates: S_aa on e_a^2, 2 S_ab on e_a e_b.
SymElement delta_on_generator(const DualWeight& lambda, std::size_t generator);

OperatorMatrix delta_matrix(const DualWeight& lambda, std::size_t k,
                            LeibnizConvention convention = LeibnizConvention::unsigned_derivation);

/// Largest |entry| of rule(s1, s2) - rule(s2, s1) over all monomials of
/// degree k and all splittings s1 s2 with positive degrees, where
/// rule(s1, s2) = delta(s1) s2 + sign(p) s1 delta(s2). Zero means the Leibniz
/// rule is consistent with commutativity at degree k.
Rational leibniz_obstruction(const DualWeight& lambda, std::size_t k, LeibnizConvention convention);

struct NilpotencyEntry {
  std::size_t degree = 0;  ///< composite delta_{k+1} delta_k on Sym^k
  Matrix composite;
  Rational max_abs_entry;
  bool vanishes = false;
};

struct NilpotencyReport {
  std::vector<NilpotencyEntry> entries;
  /// True iff delta^2 = 0 at every computed degree.
  bool claim_holds() const;
};

/// delta_{k+1} delta_k for k = 0..k_max, unsigned convention.
NilpotencyReport nilpotency_report(const DualWeight& lambda, std::size_t k_max);

/// D^k with the base collapsed to a point: (-1)^k delta_k.
OperatorMatrix spencer_differential_point_model(const DualWeight& lambda, std::size_t k,
                                                LeibnizConvention convention = LeibnizConvention::unsigned_derivation);

/// R^k = D^k_{-lambda} - D^k_{lambda}, checked against -2(-1)^k delta_k.
/// Throws InternalError if the two disagree.
OperatorMatrix operator_difference(const DualWeight& lambda, std::size_t k,
                                   LeibnizConvention convention = LeibnizConvention::unsigned_derivation);

/// Gram matrix of the Sym^k monomial basis for the inner product induced by
/// -B: <m, m'> = perm(g(u_i, v_j)) / k!. Requires -B positive definite.
Matrix sym_gram(const LieAlgebraData& algebra, std::size_t k);

struct PerturbationReport {
  std::size_t degree = 0;
  Matrix direct;    ///< Delta_{-lambda,k} - Delta_{lambda,k}
  Matrix expanded;  ///< six-term expansion in R and D
  bool agree = false;
};

/// Laplacians use Grams w_lambda * sym_gram on Sym^{k-1}, Sym^k, Sym^{k+1}.
PerturbationReport perturbation_check(const DualWeight& lambda, std::size_t k,
                                      LeibnizConvention convention = LeibnizConvention::unsigned_derivation);

}  // namespace spencer
