// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle/symmetric_oracle.hpp"
#include "spencer/char_classes.hpp"
#include "spencer/hodge.hpp"
#include "spencer/io.hpp"
#include "spencer/report.hpp"
#include "spencer/samples.hpp"
#include "spencer/spencer_operator.hpp"
#include "spencer/spencer_rr.hpp"

using namespace spencer;

namespace {

const std::filesystem::path kData = SPENCER_TEST_DATA_DIR;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

DualWeight su2(std::vector<Rational> c) { return DualWeight(LieAlgebraData::su2(), std::move(c)); }

std::vector<Rational> random_coords(samples::Rng& rng, std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(samples::random_rational(rng));
  return c;
}

std::string hrr_anchor() {
  int count = 0;
  for (int n = 1; n <= 4; ++n)
    for (long d = -6; d <= 6; ++d, ++count)
      require(hrr_line_bundle(n, d) == oracle::hrr_closed_form(n, d),
              "n=" + std::to_string(n) + " d=" + std::to_string(d));
  require(hrr_line_bundle(2, 0) == Rational(1) && hrr_line_bundle(2, 1) == Rational(3), "P^2 anchors");
  return std::to_string(count) + " line bundles exact";
}

std::string class_identities() {
  samples::Rng rng(801);
  int adams_checks = 0;
  for (int t = 0; t < 120; ++t) {
    const RingDescriptor ring{static_cast<int>(samples::random_int(rng, 1, 4))};
    const BundleClass e = samples::random_bundle(rng, ring, 4), f = samples::random_bundle(rng, ring, 4);
    require(chern_character(tensor(e, f)) == chern_character(e) * chern_character(f), "ch(E(x)F)");
    const GradedElement ext2 = e.rank() >= 2 ? chern_character(ext_power(e, 2)) : GradedElement(ring);
    require(chern_character(sym_power(e, 2)) + ext2 == chern_character(tensor(e, e)), "Sym^2 + Lambda^2");
    for (int k = 0; k <= e.rank() + 2; ++k, ++adams_checks) {
      require(chern_character(sym_power(e, k)) == sym_power_character_adams(e, k), "Sym^" + std::to_string(k));
      const GradedElement ext = k <= e.rank() ? chern_character(ext_power(e, k)) : GradedElement(ring);
      require(ext == ext_power_character_adams(e, k), "Lambda^" + std::to_string(k));
    }
  }
  return "120 bundle pairs, " + std::to_string(adams_checks) + " Adams comparisons";
}

std::string reference_diff() {
  const PaperDiff diff = verify_paper();
  require(diff.rows.size() == 13, "row count");
  const std::vector<bool> expected = {true, true, true, false, true, false, false, true, false, false, false, false, false};
  for (std::size_t i = 0; i < expected.size(); ++i)
    require(diff.rows[i].match == expected[i], diff.rows[i].quantity + " status");

  // computed column against the root-evaluation oracle at several parameter values
  const auto sym2 = [](long a) {
    return oracle::class_series(2, {3}, [](int d, const std::vector<oracle::Roots>& x) { return oracle::sym_part(d, x[0], 2); },
                                oracle::psu2_gamma(Rational(a)));
  };
  require(ParamPoly::parse(diff.rows[3].computed_value) == ParamPoly(oracle::todd_projective(2)[2]), "td coefficient");
  const auto omega2 = oracle::ch_forms(2, 2);
  for (long a = -3; a <= 3; ++a) {
    const GradedElement sym = GradedElement::parse(RingDescriptor{2}, diff.rows[5].computed_value);
    const auto s = sym2(a);
    for (int d = 0; d <= 2; ++d) require(sym[d].evaluate(Rational(a)) == s[static_cast<std::size_t>(d)], "ch(Sym^2 G)");
    Rational total(0);
    for (int k = 0; k <= 2; ++k) {
      const Rational chi = oracle::spencer_chi(k, Rational(a));
      require(ParamPoly::parse(diff.rows[8 + static_cast<std::size_t>(k)].computed_value).evaluate(Rational(a)) == chi,
              "chi^" + std::to_string(k));
      total += k % 2 == 0 ? chi : -chi;
    }
    require(ParamPoly::parse(diff.rows[11].computed_value).evaluate(Rational(a)) == oracle::spencer_chi(2, Rational(a)),
            "chi^2 (summed)");
    require(ParamPoly::parse(diff.rows[12].computed_value).evaluate(Rational(a)) == total, "chi total");
  }
  const GradedElement om = GradedElement::parse(RingDescriptor{2}, diff.rows[6].computed_value);
  for (int d = 0; d <= 2; ++d) require(om[d] == ParamPoly(omega2[static_cast<std::size_t>(d)]), "ch(Omega^2)");
  return std::to_string(diff.matches()) + " MATCH, " + std::to_string(diff.mismatches()) +
         " MISMATCH, computed values equal the oracle";
}

std::string mirror() {
  samples::Rng rng(804);
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(samples::random_int(rng, 0, 4));
    const auto algebras = samples::random_algebras(rng);
    const auto& named = algebras[static_cast<std::size_t>(samples::random_int(rng, 0, static_cast<long>(algebras.size()) - 1))];
    const DualWeight l(named.algebra, random_coords(rng, named.algebra.dim()));
    const BundleClass e = samples::random_bundle(rng, RingDescriptor{n}, 3);
    const EulerReport plus = euler_report(SpencerComplexSpec(n, e, l));
    const EulerReport minus = euler_report(SpencerComplexSpec(n, e, -l));
    require(plus.per_degree == minus.per_degree && plus.total == minus.total && plus.weight == minus.weight,
            "pair " + std::to_string(t) + " (" + named.name + ")");
    require(mirror_compare(SpencerComplexSpec(n, e, l)).mirror_equal, "mirror_compare " + std::to_string(t));
  }
  return "60 random (spec, lambda) pairs identical under lambda -> -lambda";
}

std::string operator_layer() {
  samples::Rng rng(805);
  // brute-force double brackets through the algebra's bracket
  const LieAlgebraData alg = LieAlgebraData::su2();
  const DualWeight e1 = su2({Rational(1), Rational(0), Rational(0)});
  const auto unit = [](std::size_t i) {
    std::vector<Rational> v(3);
    v[i] = Rational(1);
    return v;
  };
  int evaluations = 0;
  for (std::size_t v = 0; v < 3; ++v) {
    const Matrix s = delta_generator_form(e1, v);
    const SymElement image = delta_on_generator(e1, v);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b, ++evaluations) {
        const Rational x = e1.pair(alg.bracket(unit(a), alg.bracket(unit(b), unit(v))));
        const Rational y = e1.pair(alg.bracket(unit(b), alg.bracket(unit(a), unit(v))));
        const Rational form = (x + y) / Rational(2);
        require(s(a, b) == form, "double bracket form");
        if (a <= b) {
          const auto it = image.find({a, b});
          const Rational coeff = it == image.end() ? Rational(0) : it->second;
          require(coeff == (a == b ? form : Rational(2) * form), "delta_on_generator coordinate");
        }
      }
  }
  for (int t = 0; t < 20; ++t) {
    const DualWeight l = su2(random_coords(rng, 3));
    for (std::size_t k = 0; k <= 3; ++k) require(delta_matrix(-l, k) == -delta_matrix(l, k), "mirror antisymmetry");
  }
  for (int t = 0; t < 5; ++t) {
    const DualWeight l = su2(random_coords(rng, 3));
    for (std::size_t k = 0; k <= 3; ++k) {
      const Rational sign = k % 2 == 0 ? Rational(-2) : Rational(2);
      require(operator_difference(l, k).matrix == sign * delta_matrix(l, k).matrix, "operator difference");
      require(perturbation_check(l, k).agree, "perturbation k=" + std::to_string(k));
    }
  }
  return std::to_string(evaluations) + " double-bracket evaluations, 20 mirror weights, k <= 3";
}

std::string honest_failures() {
  const DualWeight e1 = su2({Rational(1), Rational(0), Rational(0)});
  require(!leibniz_obstruction(e1, 2, LeibnizConvention::signed_ordered).is_zero(), "signed obstruction");
  require(leibniz_obstruction(e1, 2, LeibnizConvention::unsigned_derivation).is_zero(), "unsigned obstruction");
  require(leibniz_obstruction(e1.scaled(Rational(0)), 2, LeibnizConvention::signed_ordered).is_zero(), "zero weight");

  // oracle: compose the generator images by hand with the derivation rule
  SymElement expected;
  const auto accumulate = [&](SymBasis::Monomial m, const Rational& c) {
    std::sort(m.begin(), m.end());
    expected[m] += c;
    if (expected[m].is_zero()) expected.erase(m);
  };
  for (const auto& [m, c] : delta_on_generator(e1, 0))
    for (std::size_t i = 0; i < m.size(); ++i)
      for (const auto& [mi, ci] : delta_on_generator(e1, m[i])) {
        SymBasis::Monomial out = mi;
        for (std::size_t j = 0; j < m.size(); ++j)
          if (j != i) out.push_back(m[j]);
        accumulate(out, c * ci);
      }
  const NilpotencyReport rep = nilpotency_report(e1, 2);
  const SymBasis cubic(3, 3);
  SymElement got;
  for (std::size_t r = 0; r < cubic.size(); ++r)
    if (!rep.entries[1].composite(r, 0).is_zero()) got[cubic[r]] = rep.entries[1].composite(r, 0);
  require(got == expected, "delta^2(e1) vs composition oracle");
  require(format_sym_element(got) == "-2*e1*e2^2 - 2*e1*e3^2", "delta^2(e1) value");
  require(!rep.claim_holds(), "nilpotency claim must be reported as failing");
  return "delta^2(e1) = " + format_sym_element(got) + ", nilpotency claim marked failing";
}

std::string hodge() {
  const Matrix d{{Rational(-1), Rational(1), Rational(0)},
                 {Rational(0), Rational(-1), Rational(1)},
                 {Rational(1), Rational(0), Rational(-1)}};
  const HodgeReport circle = hodge_verify({d}, {Matrix::identity(3), Matrix::identity(3)});
  require(circle.holds() && circle.degrees[0].harmonic_dim == 1 && circle.degrees[1].harmonic_dim == 1, "circle");
  samples::Rng rng(807);
  for (int t = 0; t < 25; ++t) {
    const auto c = samples::random_exact_complex(rng, static_cast<std::size_t>(samples::random_int(rng, 2, 5)), 6);
    const HodgeReport rep = hodge_verify(c.ops, c.grams);
    require(rep.holds(), "random complex " + std::to_string(t));
    for (std::size_t k = 0; k < rep.degrees.size(); ++k)
      require(rep.degrees[k].harmonic_dim == c.betti[k] && rep.degrees[k].cohomology_dim == c.betti[k] &&
                  rep.degrees[k].orthogonal,
              "random complex " + std::to_string(t) + " degree " + std::to_string(k));
  }
  return "circle complex and 25 random exact complexes";
}

std::string determinism_and_schema() {
  const auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), "spencer-rr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::make_tuple(code, out.str(), err.str());
  };
  const std::string input = (kData / "psu2_p2.json").string();
  const auto [c1, o1, e1] = run({"compute", "--input", input, "--format", "json"});
  const auto [c2, o2, e2] = run({"compute", "--input", input, "--format", "json"});
  require(c1 == 0 && c2 == 0 && o1 == o2 && !o1.empty(), "byte-identical reports");
  const auto [c3, o3, e3] = run({"compute", "--input", (kData / "missing_base.json").string()});
  require(c3 == 2, "malformed spec exit code");
  require(e3.find("/base") != std::string::npos, "field-level message");
  return "reports byte-identical; missing field exits 2 with \"" + e3.substr(0, e3.find('\n')) + "\"";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"HRR line bundles", hrr_anchor},
      {"characteristic-class identities", class_identities},
      {"reference P^2 computation with diff", reference_diff},
      {"mirror symmetry", mirror},
      {"su(2) operator layer", operator_layer},
      {"honest-failure reports", honest_failures},
      {"finite-dimensional Hodge", hodge},
      {"determinism and schema", determinism_and_schema},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    std::string status, detail;
    try {
      detail = check();
      status = "PASS";
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failed;
    std::cout << status << " criterion " << i + 1 << ": " << name << " (" << detail << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
