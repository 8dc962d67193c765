#include "spencer/report.hpp"

#include <algorithm>
#include <sstream>

#include "spencer/spencer_operator.hpp"

namespace spencer {

using nlohmann::json;

namespace {

constexpr const char* kParam = "a";

struct RowBuilder {
  RingDescriptor ring;
  ParamPoly a;
  PaperDiff diff;

  void graded(std::string quantity, std::string quote, std::string_view paper_text, const GradedElement& computed) {
    GradedElement paper = GradedElement::parse(ring, paper_text, kParam);
    if (a.is_constant()) paper = paper.evaluate(a.constant());
    diff.rows.push_back({std::move(quantity), std::move(quote), paper.to_string(kParam), computed.to_string(kParam),
                         paper == computed});
  }

  void number(std::string quantity, std::string quote, std::string_view paper_text, const ParamPoly& computed) {
    ParamPoly paper = ParamPoly::parse(paper_text, kParam);
    if (a.is_constant()) paper = ParamPoly(paper.evaluate(a.constant()));
    diff.rows.push_back({std::move(quantity), std::move(quote), paper.to_string(kParam), computed.to_string(kParam),
                         paper == computed});
  }
};

json rational_json(const Rational& r) { return r.to_string(); }

json optional_rational(const std::optional<Rational>& r) { return r ? json(r->to_string()) : json(nullptr); }

std::optional<Rational> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational::parse(j.get<std::string>());
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

CheckResult nilpotency_check(const DualWeight& lambda, std::size_t max_degree) {
  const NilpotencyReport rep = nilpotency_report(lambda, max_degree == 0 ? 0 : max_degree - 1);
  json degrees = json::array();
  for (const auto& e : rep.entries) {
    json d = {{"degree", e.degree}, {"max_abs_entry", rational_json(e.max_abs_entry)}, {"vanishes", e.vanishes}};
    const SymBasis domain(lambda.algebra.dim(), e.degree);
    const SymBasis codomain(lambda.algebra.dim(), e.degree + 2);
    for (std::size_t col = 0; col < e.composite.cols(); ++col) {
      SymElement image;
      for (std::size_t r = 0; r < e.composite.rows(); ++r)
        if (!e.composite(r, col).is_zero()) image.emplace(codomain[r], e.composite(r, col));
      if (!image.empty()) {
        d["first_nonzero"] = "delta^2(" + SymBasis::label(domain[col]) + ") = " + format_sym_element(image);
        break;
      }
    }
    degrees.push_back(std::move(d));
  }
  return {"nilpotency", rep.claim_holds(),
          {{"claim", "delta^2 = 0"}, {"convention", to_string(LeibnizConvention::unsigned_derivation)},
           {"degrees", std::move(degrees)}}};
}

CheckResult obstruction_check(const DualWeight& lambda, std::size_t max_degree) {
  json details = json::object();
  bool unsigned_zero = true;
  for (LeibnizConvention conv : {LeibnizConvention::unsigned_derivation, LeibnizConvention::signed_ordered}) {
    json per = json::object();
    for (std::size_t k = 2; k <= max_degree; ++k) {
      const Rational o = leibniz_obstruction(lambda, k, conv);
      per[std::to_string(k)] = o.to_string();
      if (conv == LeibnizConvention::unsigned_derivation && !o.is_zero()) unsigned_zero = false;
    }
    details[to_string(conv)] = std::move(per);
  }
  return {"obstruction", unsigned_zero, std::move(details)};
}

CheckResult operator_difference_check(const DualWeight& lambda, std::size_t max_degree) {
  json degrees = json::array();
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const OperatorMatrix r = operator_difference(lambda, k);
    degrees.push_back({{"degree", k}, {"factor", k % 2 == 0 ? "-2" : "2"}, {"shape", shape(r.matrix)}});
  }
  return {"operator_difference", true, {{"identity", "R^k = -2(-1)^k delta_k"}, {"degrees", std::move(degrees)}}};
}

CheckResult perturbation_check_result(const DualWeight& lambda, std::size_t max_degree) {
  json degrees = json::array();
  bool all = true;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const PerturbationReport p = perturbation_check(lambda, k);
    all = all && p.agree;
    degrees.push_back({{"degree", k}, {"agree", p.agree}, {"shape", shape(p.direct)}});
  }
  return {"perturbation", all, {{"degrees", std::move(degrees)}}};
}

CheckResult mirror_antisymmetry_check(const DualWeight& lambda, std::size_t max_degree) {
  json degrees = json::array();
  bool all = true;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const bool ok = delta_matrix(-lambda, k) == -delta_matrix(lambda, k);
    all = all && ok;
    degrees.push_back({{"degree", k}, {"holds", ok}});
  }
  return {"mirror_antisymmetry", all, {{"degrees", std::move(degrees)}}};
}

json check_json(const CheckResult& c) { return {{"name", c.name}, {"holds", c.holds}, {"details", c.details}}; }

json row_json(const PaperRow& r) {
  return {{"quantity", r.quantity},
          {"quote", r.quote},
          {"paper", r.paper_value},
          {"computed", r.computed_value},
          {"status", r.match ? "MATCH" : "MISMATCH"}};
}

PaperRow row_from(const json& j) {
  return {j.at("quantity").get<std::string>(), j.at("quote").get<std::string>(), j.at("paper").get<std::string>(),
          j.at("computed").get<std::string>(), j.at("status").get<std::string>() == "MATCH"};
}

void render_rows(std::ostringstream& out, const std::vector<PaperRow>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.quantity.size());
  for (const auto& r : rows) {
    out << "  " << (r.match ? "MATCH   " : "MISMATCH") << "  " << r.quantity << std::string(w - r.quantity.size(), ' ')
        << "  published " << r.paper_value << "  computed " << r.computed_value << "\n";
    out << "            " << std::string(w, ' ') << "  quoted: " << r.quote << "\n";
  }
}

}  // namespace

std::size_t PaperDiff::matches() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const PaperRow& r) { return r.match; }));
}

PaperDiff verify_paper(const ParamPoly& a) {
  const RingDescriptor ring{2};
  const BundleClass g = psu2_adjoint_bundle(2, a);
  const SpencerComplexSpec spec(2, g);
  const BundleClass cotangent = dual(tangent_projective(2));
  const EulerReport euler = euler_report(spec);

  RowBuilder b{ring, a, {}};
  b.number("integral of H^2 over P^2", "\\int_{\\mathbb{P}^2} H^2 = 1", "1",
           integrate(GradedElement::monomial(ring, 2, ParamPoly(1))));
  b.graded("ch(G)", "= 3 - aH^2", "3 - a*H^2", chern_character(g));
  b.graded("ch(Omega^1)", "= 2 - 3H + \\frac{3H^2}{2}", "2 - 3*H + 3/2*H^2", chern_character(cotangent));
  b.number("td(P^2) H^2 coefficient", "= 1 + \\frac{3H}{2} + \\frac{3H^2}{2}", "3/2",
           todd_class(tangent_projective(2))[2]);
  b.number("rank Sym^2(G)", "\\binom{4}{2} = 6", "6", ParamPoly(sym_power(g, 2).rank()));
  b.graded("ch(Sym^2 G)", "= 6 - \\frac{7a}{2}H^2", "6 - 7/2*a*H^2", chern_character(sym_power(g, 2)));
  b.graded("ch(Omega^2)", "= 1 + 3H^2", "1 + 3*H^2", chern_character(ext_power(cotangent, 2)));
  b.graded("ch(Omega^1) ch(Sym^1 G)", "= 6 - 9H + \\left(\\frac{9}{2} - 2a\\right)H^2", "6 - 9*H + (9/2 - 2*a)*H^2",
           term_class(spec, 1));
  b.number("chi^0", "= \\frac{3}{2}", "3/2", euler.per_degree[0]);
  b.number("chi^1", "= -2a", "-2*a", euler.per_degree[1]);
  b.number("chi^2", "= 27 - \\frac{7a}{2}", "27 - 7/2*a", euler.per_degree[2]);
  b.number("chi^2 as summed into the total", "\\left(18 - \\frac{7a}{2}\\right)", "18 - 7/2*a", euler.per_degree[2]);
  b.number("chi total", "= \\frac{39}{2} - \\frac{3a}{2}", "39/2 - 3/2*a", euler.total);
  return std::move(b.diff);
}

json OutputReport::to_json() const {
  json per = json::array();
  for (const auto& p : per_degree) per.push_back(p.to_string(kParam));
  json cs = json::array();
  for (const auto& c : checks) cs.push_back(check_json(c));
  json rows = json::array();
  for (const auto& r : paper_diff) rows.push_back(row_json(r));
  return {{"inputs", inputs},
          {"term_classes", term_classes},
          {"alternating_chern", alternating_chern},
          {"euler", {{"per_degree", std::move(per)}, {"total", total.to_string(kParam)}}},
          {"mirror", {{"weight", optional_rational(weight)},
                      {"mirror_weight", optional_rational(mirror_weight)},
                      {"equal", mirror_equal}}},
          {"checks", std::move(cs)},
          {"paper_diff", std::move(rows)},
          {"exit_status", exit_status}};
}

OutputReport OutputReport::from_json(const json& j) {
  OutputReport r;
  r.inputs = j.at("inputs");
  r.term_classes = j.at("term_classes").get<std::vector<std::string>>();
  r.alternating_chern = j.at("alternating_chern").get<std::string>();
  for (const auto& p : j.at("euler").at("per_degree")) r.per_degree.push_back(ParamPoly::parse(p.get<std::string>(), kParam));
  r.total = ParamPoly::parse(j.at("euler").at("total").get<std::string>(), kParam);
  r.weight = optional_from(j.at("mirror").at("weight"));
  r.mirror_weight = optional_from(j.at("mirror").at("mirror_weight"));
  r.mirror_equal = j.at("mirror").at("equal").get<bool>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(), c.at("details")});
  for (const auto& row : j.at("paper_diff")) r.paper_diff.push_back(row_from(row));
  r.exit_status = j.at("exit_status").get<int>();
  return r;
}

OutputReport run_compute(const InputSpec& input) {
  const SpencerComplexSpec spec = input.complex_spec();
  const EulerReport euler = mirror_compare(spec);
  if (!euler.mirror_equal) throw InternalError("pipeline output changed under lambda -> -lambda");

  OutputReport out;
  out.inputs = input.echo;
  for (int k = 0; k <= spec.base_dim; ++k) out.term_classes.push_back(term_class(spec, k).to_string(kParam));
  out.alternating_chern = alternating_chern(spec).to_string(kParam);
  out.per_degree = euler.per_degree;
  out.total = euler.total;
  out.weight = euler.weight;
  out.mirror_weight = euler.mirror_weight;
  out.mirror_equal = euler.mirror_equal;

  const std::optional<DualWeight> lambda = input.weight();
  for (CheckKind c : input.checks) {
    switch (c) {
      case CheckKind::mirror:
        out.checks.push_back({"mirror", euler.mirror_equal,
                              {{"weight", optional_rational(euler.weight)},
                               {"mirror_weight", optional_rational(euler.mirror_weight)}}});
        break;
      case CheckKind::nilpotency: out.checks.push_back(nilpotency_check(*lambda, input.max_degree)); break;
      case CheckKind::obstruction: out.checks.push_back(obstruction_check(*lambda, input.max_degree)); break;
      case CheckKind::perturbation: {
        CheckResult r = perturbation_check_result(*lambda, input.max_degree);
        if (!r.holds) throw InternalError("perturbation expansion disagrees with the direct Laplacian difference");
        out.checks.push_back(std::move(r));
        break;
      }
      case CheckKind::operator_difference:
        out.checks.push_back(operator_difference_check(*lambda, input.max_degree));
        break;
    }
  }

  if (input.projective == 2 && input.bundle_kind == "psu2")
    out.paper_diff = verify_paper(input.bundle.chern_number(2)).rows;
  return out;
}

json lie_report(const LieAlgebraData& algebra, const std::vector<Rational>& coords, std::size_t max_degree) {
  const LieValidity v = validate_lie(algebra);
  const DualWeight lambda(algebra, coords);
  json coords_json = json::array();
  for (const auto& c : coords) coords_json.push_back(c.to_string());

  json out;
  out["algebra"] = {{"dim", algebra.dim()},
                    {"killing", matrix_json(v.killing)},
                    {"killing_determinant", v.killing_determinant.to_string()},
                    {"semisimple", v.semisimple},
                    {"compact", v.negative_definite}};
  out["lambda"] = coords_json;
  out["max_degree"] = max_degree;
  if (v.semisimple) {
    out["weight"] = weight_function(lambda).to_string();
    out["mirror_weight"] = weight_function(-lambda).to_string();
  } else {
    out["weight"] = nullptr;
    out["mirror_weight"] = nullptr;
  }
  json gens = json::object();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    gens["e" + std::to_string(i + 1)] = format_sym_element(delta_on_generator(lambda, i));
  out["delta_on_generators"] = std::move(gens);

  json checks = json::array();
  checks.push_back(check_json(mirror_antisymmetry_check(lambda, max_degree)));
  checks.push_back(check_json(nilpotency_check(lambda, max_degree)));
  checks.push_back(check_json(obstruction_check(lambda, max_degree)));
  checks.push_back(check_json(operator_difference_check(lambda, max_degree)));
  if (v.negative_definite)
    checks.push_back(check_json(perturbation_check_result(lambda, max_degree)));
  else
    checks.push_back({{"name", "perturbation"},
                      {"holds", nullptr},
                      {"details", {{"skipped", "Killing form is not negative definite"}}}});
  out["checks"] = std::move(checks);
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json to_json(const PaperDiff& diff) {
  json rows = json::array();
  for (const auto& r : diff.rows) rows.push_back(row_json(r));
  return {{"rows", std::move(rows)}, {"matches", diff.matches()}, {"mismatches", diff.mismatches()}};
}

std::string render_text(const PaperDiff& diff) {
  std::ostringstream out;
  out << "Reference computation on P^2, adjoint PSU(2) bundle with c_2 = aH^2\n";
  render_rows(out, diff.rows);
  out << diff.matches() << " match, " << diff.mismatches() << " mismatch\n";
  return out.str();
}

std::string render_text(const OutputReport& r) {
  std::ostringstream out;
  const int n = static_cast<int>(r.per_degree.size()) - 1;
  out << "Spencer complex on P^" << n << "\n";
  out << "ch(Omega^k (x) Sym^k G):\n";
  for (std::size_t k = 0; k < r.term_classes.size(); ++k) out << "  k=" << k << "  " << r.term_classes[k] << "\n";
  out << "alternating ch: " << r.alternating_chern << "\n";
  out << "Euler characteristics:\n";
  for (std::size_t k = 0; k < r.per_degree.size(); ++k)
    out << "  chi^" << k << " = " << r.per_degree[k].to_string(kParam) << "\n";
  out << "  total = " << r.total.to_string(kParam) << "\n";
  if (r.weight) out << "weight w(lambda) = " << r.weight->to_string() << ", w(-lambda) = " << r.mirror_weight->to_string() << "\n";
  out << "mirror lambda -> -lambda: " << (r.mirror_equal ? "identical" : "DIFFERENT") << "\n";
  for (const auto& c : r.checks) {
    out << "check " << c.name << ": " << (c.holds ? "holds" : "fails") << "\n";
    out << "  " << c.details.dump() << "\n";
  }
  if (!r.paper_diff.empty()) {
    out << "Reference values:\n";
    render_rows(out, r.paper_diff);
  }
  return out.str();
}

std::string render_lie_text(const json& rep) {
  std::ostringstream out;
  const json& alg = rep.at("algebra");
  out << "algebra: dim " << alg.at("dim").get<std::size_t>() << ", det B = " << alg.at("killing_determinant").get<std::string>()
      << (alg.at("semisimple").get<bool>() ? ", semisimple" : ", not semisimple")
      << (alg.at("compact").get<bool>() ? ", compact" : "") << "\n";
  out << "lambda: " << rep.at("lambda").dump() << "\n";
  if (!rep.at("weight").is_null())
    out << "weight: w(lambda) = " << rep.at("weight").get<std::string>()
        << ", w(-lambda) = " << rep.at("mirror_weight").get<std::string>() << "\n";
  for (const auto& [gen, img] : rep.at("delta_on_generators").items())
    out << "delta(" << gen << ") = " << img.get<std::string>() << "\n";
  for (const auto& c : rep.at("checks")) {
    const json& h = c.at("holds");
    out << c.at("name").get<std::string>() << ": " << (h.is_null() ? "skipped" : h.get<bool>() ? "holds" : "fails")
        << "\n  " << c.at("details").dump() << "\n";
  }
  return out.str();
}

}  // namespace spencer
