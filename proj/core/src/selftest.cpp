#include "spencer/selftest.hpp"

#include <functional>
#include <memory>
#include <sstream>

#include "spencer/char_classes.hpp"
#include "spencer/hodge.hpp"
#include "spencer/io.hpp"
#include "spencer/report.hpp"
#include "spencer/samples.hpp"
#include "spencer/spencer_operator.hpp"
#include "spencer/spencer_rr.hpp"
#include "spencer/symmetric_functions.hpp"

namespace spencer {

namespace {

using samples::Rng;

// Each check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string(Rng&)>;

std::string fail(const std::string& what, const GradedElement& lhs, const GradedElement& rhs) {
  return what + ": " + lhs.to_string() + " vs " + rhs.to_string();
}

RingDescriptor random_ring(Rng& rng, int lo, int hi) { return RingDescriptor{static_cast<int>(samples::random_int(rng, lo, hi))}; }

DualWeight random_su2_weight(Rng& rng) {
  return DualWeight(LieAlgebraData::su2(), {samples::random_rational(rng), samples::random_rational(rng),
                                            samples::random_rational(rng)});
}

DualWeight random_weight(Rng& rng, const LieAlgebraData& alg) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < alg.dim(); ++i) c.push_back(samples::random_rational(rng));
  return DualWeight(alg, std::move(c));
}

// Sum over monomials prod c_i^{alpha_i} of weighted degree <= n, once as ring
// elements and once as polynomials in the elementary symmetric functions.
std::string symmetrize_roundtrip(Rng& rng) {
  for (int trial = 0; trial < 10; ++trial) {
    const RingDescriptor ring = random_ring(rng, 1, 4);
    const BundleClass e = samples::random_bundle(rng, ring, 3);
    const int r = e.rank();
    const std::vector<GradedElement> chern = e.chern_classes();
    GradedElement expected(ring);
    SplitElement split(ring, r);
    std::vector<int> alpha(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int i, int budget) {
      if (i == r) {
        const Rational coeff(samples::random_int(rng, -3, 3));
        GradedElement g = GradedElement::constant(ring, coeff);
        SplitElement s = SplitElement::constant(ring, r, coeff);
        for (int j = 0; j < r; ++j)
          for (int m = 0; m < alpha[static_cast<std::size_t>(j)]; ++m) {
            g *= chern[static_cast<std::size_t>(j)];
            s = s * SplitElement::elementary(ring, r, j + 1);
          }
        expected += g;
        split += s;
        return;
      }
      for (int a = 0; a * (i + 1) <= budget; ++a) {
        alpha[static_cast<std::size_t>(i)] = a;
        rec(i + 1, budget - a * (i + 1));
      }
    };
    rec(0, ring.dim);
    const GradedElement got = symmetrize_to_chern(split, chern);
    if (got != expected) return fail("symmetrize(expand(P)) != P", got, expected);
  }
  return {};
}

// Coefficient of t^k in prod_i (1 - t y_i)^{-1} (complete) or prod_i (1 + t y_i)
// (elementary), y_i = exp(x_i), computed root by root in the splitting ring.
SplitElement generating_coefficient(const BundleClass& e, int k, bool complete) {
  const RingDescriptor ring = e.ring();
  const int r = e.rank();
  std::vector<SplitElement> y;
  for (int i = 0; i < r; ++i) y.push_back(exp_truncated(SplitElement::root(ring, r, i)));
  // acc[j] = coefficient of t^j using the roots processed so far
  std::vector<SplitElement> acc(static_cast<std::size_t>(k) + 1, SplitElement(ring, r));
  acc[0] = SplitElement::constant(ring, r, ParamPoly(1));
  for (int i = 0; i < r; ++i) {
    std::vector<SplitElement> next(acc.size(), SplitElement(ring, r));
    for (int j = 0; j <= k; ++j) {
      SplitElement power = SplitElement::constant(ring, r, ParamPoly(1));
      for (int m = 0; m <= j && (complete || m <= 1); ++m) {
        next[static_cast<std::size_t>(j)] += acc[static_cast<std::size_t>(j - m)] * power;
        power = power * y[static_cast<std::size_t>(i)];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(k)];
}

std::vector<std::pair<std::string, Check>> invariants() {
  std::vector<std::pair<std::string, Check>> out;
  auto add = [&](std::string name, Check c) { out.emplace_back(std::move(name), std::move(c)); };

  add("graded_core: ring axioms", [](Rng& rng) -> std::string {
    for (int t = 0; t < 30; ++t) {
      const RingDescriptor ring = random_ring(rng, 0, 6);
      const auto a = samples::random_graded(rng, ring), b = samples::random_graded(rng, ring),
                 c = samples::random_graded(rng, ring);
      if ((a * b) * c != a * (b * c)) return fail("associativity", (a * b) * c, a * (b * c));
      if (a * b != b * a) return fail("commutativity", a * b, b * a);
      if (a * (b + c) != a * b + a * c) return fail("distributivity", a * (b + c), a * b + a * c);
    }
    return {};
  });
  add("graded_core: truncation consistency", [](Rng& rng) -> std::string {
    for (int t = 0; t < 30; ++t) {
      const RingDescriptor big = random_ring(rng, 1, 6);
      const int small = static_cast<int>(samples::random_int(rng, 0, big.dim - 1));
      const auto a = samples::random_graded(rng, big), b = samples::random_graded(rng, big);
      if ((a * b).project(small) != a.project(small) * b.project(small))
        return fail("project(ab) != project(a)project(b)", (a * b).project(small), a.project(small) * b.project(small));
    }
    return {};
  });
  add("graded_core: exp(a) exp(-a) = 1", [](Rng& rng) -> std::string {
    for (int t = 0; t < 30; ++t) {
      const RingDescriptor ring = random_ring(rng, 0, 6);
      GradedElement a = samples::random_graded(rng, ring);
      a[0] = ParamPoly();
      const GradedElement p = exp_truncated(a) * exp_truncated(-a);
      if (p != GradedElement::one(ring)) return fail("exp(a)exp(-a)", p, GradedElement::one(ring));
    }
    return {};
  });
  add("graded_core: symmetrize inverts expansion", symmetrize_roundtrip);

  add("char_classes: ch multiplicative on tensor products", [](Rng& rng) -> std::string {
    for (int t = 0; t < 25; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 4);
      const auto e = samples::random_bundle(rng, ring, 4), f = samples::random_bundle(rng, ring, 4);
      const auto lhs = chern_character(tensor(e, f)), rhs = chern_character(e) * chern_character(f);
      if (lhs != rhs) return fail("ch(E(x)F) != ch(E)ch(F)", lhs, rhs);
    }
    return {};
  });
  add("char_classes: Whitney sum", [](Rng& rng) -> std::string {
    for (int t = 0; t < 25; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 4);
      const auto e = samples::random_bundle(rng, ring, 4), f = samples::random_bundle(rng, ring, 4);
      const BundleClass s = direct_sum(e, f);
      if (s.chern() != e.chern() * f.chern()) return fail("c(E+F) != c(E)c(F)", s.chern(), e.chern() * f.chern());
      if (chern_character(s) != chern_character(e) + chern_character(f))
        return fail("ch(E+F) != ch(E)+ch(F)", chern_character(s), chern_character(e) + chern_character(f));
    }
    return {};
  });
  add("char_classes: Sym^2 + Lambda^2 = E (x) E", [](Rng& rng) -> std::string {
    for (int t = 0; t < 25; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 4);
      const auto e = samples::random_bundle(rng, ring, 4);
      const auto ext = e.rank() >= 2 ? chern_character(ext_power(e, 2)) : GradedElement(ring);
      const auto lhs = chern_character(sym_power(e, 2)) + ext;
      const auto rhs = chern_character(tensor(e, e));
      if (lhs != rhs) return fail("Sym^2 + Lambda^2", lhs, rhs);
    }
    return {};
  });
  add("char_classes: generating functions up to rank+2", [](Rng& rng) -> std::string {
    for (int t = 0; t < 8; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 3);
      const auto e = samples::random_bundle(rng, ring, 3);
      const ChernRoots roots(e);
      for (int k = 0; k <= e.rank() + 2; ++k) {
        const auto sym = roots.symmetrize(generating_coefficient(e, k, true));
        if (sym != chern_character(sym_power(e, k))) return fail("Sym^" + std::to_string(k), sym, chern_character(sym_power(e, k)));
        if (sym != sym_power_character_adams(e, k)) return fail("Sym^" + std::to_string(k) + " (Adams)", sym, sym_power_character_adams(e, k));
        const auto ext = roots.symmetrize(generating_coefficient(e, k, false));
        const auto direct = k <= e.rank() ? chern_character(ext_power(e, k)) : GradedElement(ring);
        if (ext != direct) return fail("Lambda^" + std::to_string(k), ext, direct);
        if (ext != ext_power_character_adams(e, k)) return fail("Lambda^" + std::to_string(k) + " (Adams)", ext, ext_power_character_adams(e, k));
      }
    }
    return {};
  });
  add("char_classes: Adams formulas for Sym^2 and Lambda^2", [](Rng& rng) -> std::string {
    for (int t = 0; t < 25; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 4);
      const auto e = samples::random_bundle(rng, ring, 4);
      const auto ch = chern_character(e), psi2 = adams(e, 2);
      const auto sym = (ch * ch + psi2) / Rational(2), ext = (ch * ch - psi2) / Rational(2);
      if (sym != chern_character(sym_power(e, 2))) return fail("Sym^2", sym, chern_character(sym_power(e, 2)));
      const auto direct = e.rank() >= 2 ? chern_character(ext_power(e, 2)) : GradedElement(ring);
      if (ext != direct) return fail("Lambda^2", ext, direct);
    }
    return {};
  });
  add("char_classes: duality", [](Rng& rng) -> std::string {
    for (int t = 0; t < 25; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 4);
      const auto e = samples::random_bundle(rng, ring, 4);
      if (dual(dual(e)) != e) return fail("dual(dual(E))", dual(dual(e)).chern(), e.chern());
      const auto p = todd_class(e) * todd_class(dual(e));
      for (int d = 1; d <= ring.dim; d += 2)
        if (!p[d].is_zero()) return fail("odd part of td(E)td(E*)", p, p.component(0));
    }
    return {};
  });

  add("lie_spencer: delta(-lambda) = -delta(lambda)", [](Rng& rng) -> std::string {
    for (const auto& named : samples::random_algebras(rng)) {
      const DualWeight l = random_weight(rng, named.algebra);
      for (std::size_t k = 0; k <= (named.algebra.dim() > 4 ? 2u : 3u); ++k)
        if (delta_matrix(-l, k) != -delta_matrix(l, k)) return named.name + ", degree " + std::to_string(k);
    }
    return {};
  });
  add("lie_spencer: operator difference R^k = -2(-1)^k delta", [](Rng& rng) -> std::string {
    for (int t = 0; t < 3; ++t) {
      const DualWeight l = random_su2_weight(rng);
      for (std::size_t k = 0; k <= 4; ++k) operator_difference(l, k);  // throws on mismatch
    }
    return {};
  });
  add("lie_spencer: unsigned Leibniz obstruction vanishes", [](Rng& rng) -> std::string {
    for (const auto& named : samples::random_algebras(rng)) {
      const DualWeight l = random_weight(rng, named.algebra);
      for (std::size_t k = 2; k <= (named.algebra.dim() > 4 ? 2u : 3u); ++k) {
        const Rational o = leibniz_obstruction(l, k, LeibnizConvention::unsigned_derivation);
        if (!o.is_zero()) return named.name + ", degree " + std::to_string(k) + ": " + o.to_string();
      }
    }
    return {};
  });
  add("lie_spencer: weight function", [](Rng& rng) -> std::string {
    for (const auto& named : samples::random_algebras(rng)) {
      if (killing_form(named.algebra).determinant().is_zero()) continue;
      const DualWeight l = random_weight(rng, named.algebra);
      const Rational w = weight_function(l);
      if (w != weight_function(-l)) return named.name + ": w(-lambda) != w(lambda)";
      if (weight_function(l.scaled(Rational(0))) != Rational(1)) return named.name + ": w(0) != 1";
      if (named.compact && w < Rational(1)) return named.name + ": w < 1 on a compact form";
    }
    return {};
  });
  add("lie_spencer: adjoint contract", [](Rng& rng) -> std::string {
    for (int t = 0; t < 20; ++t) {
      const auto m = static_cast<std::size_t>(samples::random_int(rng, 1, 5));
      const auto n = static_cast<std::size_t>(samples::random_int(rng, 1, 5));
      Matrix a(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = samples::random_rational(rng);
      const Matrix gv = samples::random_gram(rng, n), gw = samples::random_gram(rng, m);
      Matrix x(n, 1), y(m, 1);
      for (std::size_t i = 0; i < n; ++i) x(i, 0) = samples::random_rational(rng);
      for (std::size_t i = 0; i < m; ++i) y(i, 0) = samples::random_rational(rng);
      if ((a * x).transpose() * gw * y != x.transpose() * gv * (adjoint(a, gv, gw) * y)) return "<Ax,y> != <x,A^dag y>";
    }
    return {};
  });
  add("lie_spencer: finite-dimensional Hodge theorem", [](Rng& rng) -> std::string {
    for (int t = 0; t < 20; ++t) {
      const auto c = samples::random_exact_complex(rng, static_cast<std::size_t>(samples::random_int(rng, 2, 4)), 5);
      const HodgeReport rep = hodge_verify(c.ops, c.grams);
      for (std::size_t k = 0; k < rep.degrees.size(); ++k)
        if (rep.degrees[k].harmonic_dim != c.betti[k] || !rep.holds())
          return "degree " + std::to_string(k) + ": harmonic " + std::to_string(rep.degrees[k].harmonic_dim) +
                 ", expected " + std::to_string(c.betti[k]);
    }
    return {};
  });
  add("lie_spencer: perturbation expansion", [](Rng& rng) -> std::string {
    const DualWeight l = random_su2_weight(rng);
    for (std::size_t k = 0; k <= 3; ++k)
      if (!perturbation_check(l, k).agree) return "degree " + std::to_string(k);
    return {};
  });

  add("spencer_rr: HRR anchor", [](Rng&) -> std::string {
    for (int n = 1; n <= 4; ++n)
      for (long d = -6; d <= 6; ++d) hrr_line_bundle(n, d);  // throws on mismatch with the closed form
    return {};
  });
  add("spencer_rr: Serre duality", [](Rng&) -> std::string {
    for (int n = 1; n <= 4; ++n)
      for (long d = -6; d <= 6; ++d) {
        const Rational lhs = hrr_line_bundle(n, d);
        const Rational rhs = (n % 2 == 0 ? Rational(1) : Rational(-1)) * hrr_line_bundle(n, -d - n - 1);
        if (lhs != rhs) return "n=" + std::to_string(n) + ", d=" + std::to_string(d);
      }
    return {};
  });
  add("spencer_rr: additivity under G -> G + O", [](Rng& rng) -> std::string {
    for (int t = 0; t < 6; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 3);
      const auto g = samples::random_bundle(rng, ring, 3);
      const SpencerComplexSpec plain(ring.dim, g), bigger(ring.dim, direct_sum(g, BundleClass::trivial(ring, 1)));
      const BundleClass omega = dual(tangent_projective(ring.dim));
      GradedElement expected(ring);
      for (int k = 0; k <= ring.dim; ++k) {
        GradedElement sym(ring);
        for (int j = 0; j <= k; ++j) sym += chern_character(sym_power(g, j));
        const GradedElement term = chern_character(ext_power(omega, k)) * sym;
        if (k % 2 == 0)
          expected += term;
        else
          expected -= term;
      }
      if (alternating_chern(bigger) != expected) return fail("alternating ch", alternating_chern(bigger), expected);
      const ParamPoly total = integrate(expected * todd_class(tangent_projective(ring.dim)));
      if (total_euler(bigger) != total) return "total " + total_euler(bigger).to_string() + " vs " + total.to_string();
    }
    return {};
  });
  add("spencer_rr: two-path total", [](Rng& rng) -> std::string {
    for (int t = 0; t < 10; ++t) {
      const RingDescriptor ring = random_ring(rng, 0, 3);
      const SpencerComplexSpec spec(ring.dim, samples::random_bundle(rng, ring, 3));
      ParamPoly alt;
      for (int k = 0; k <= ring.dim; ++k) alt += (k % 2 == 0 ? Rational(1) : Rational(-1)) * euler_char_degree(spec, k);
      const GradedElement td = ring.dim == 0 ? GradedElement::one(ring) : todd_class(tangent_projective(ring.dim));
      if (alt != integrate(alternating_chern(spec) * td)) return "alternating sum != integral";
    }
    return {};
  });
  add("spencer_rr: mirror equality", [](Rng& rng) -> std::string {
    for (int t = 0; t < 10; ++t) {
      const RingDescriptor ring = random_ring(rng, 1, 3);
      const SpencerComplexSpec spec(ring.dim, samples::random_bundle(rng, ring, 3), random_su2_weight(rng));
      if (!mirror_compare(spec).mirror_equal) return "mirror_equal = false";
    }
    return {};
  });

  add("report_cli: deterministic reports", [](Rng&) -> std::string {
    const auto doc = nlohmann::json::parse(
        R"({"base":{"projective":2},"bundle":{"builtin":"psu2","a":"symbolic"},"lambda":[1,0,0],"checks":["mirror","nilpotency","obstruction"]})");
    const std::string first = dump_json(run_compute(parse_input(doc)).to_json());
    const std::string second = dump_json(run_compute(parse_input(doc)).to_json());
    return first == second ? std::string() : "two runs differ";
  });
  add("report_cli: report round trip", [](Rng&) -> std::string {
    const auto doc = nlohmann::json::parse(
        R"({"base":{"projective":2},"bundle":{"builtin":"psu2"},"lambda":[1,"1/2",0],"checks":["mirror","operator_difference"]})");
    const OutputReport r = run_compute(parse_input(doc));
    return OutputReport::from_json(nlohmann::json::parse(dump_json(r.to_json()))) == r ? std::string()
                                                                                         : "re-parsed report differs";
  });
  add("report_cli: reference table", [](Rng&) -> std::string {
    const PaperDiff diff = verify_paper();
    if (diff.rows.size() != 13) return std::to_string(diff.rows.size()) + " rows";
    const bool expected_match[13] = {true, true, true, false, true, false, false, true, false, false, false, false, false};
    for (std::size_t i = 0; i < diff.rows.size(); ++i) {
      if (diff.rows[i].quote.empty()) return diff.rows[i].quantity + ": empty quote";
      if (diff.rows[i].match != expected_match[i]) return diff.rows[i].quantity + ": unexpected status";
    }
    return {};
  });
  return out;
}

}  // namespace

std::vector<SelftestResult> run_selftest(const SelftestOptions& options) {
  std::unique_ptr<fault_injection::ScopedNewtonCorruption> corruption;
  if (options.corrupt_newton) corruption = std::make_unique<fault_injection::ScopedNewtonCorruption>();
  std::vector<SelftestResult> results;
  Rng rng(options.seed);
  for (auto& [name, check] : invariants()) {
    // Each invariant draws from its own stream so adding one does not shift the others.
    Rng local(rng());
    SelftestResult r{name, false, {}};
    try {
      r.detail = check(local);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_selftest(const std::vector<SelftestResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << "\n";
    } else {
      out << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  out << passed << "/" << results.size() << " invariants passed\n";
  return out.str();
}

bool all_passed(const std::vector<SelftestResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace spencer
