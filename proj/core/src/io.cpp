#include "spencer/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "spencer/detail/terms.hpp"

namespace spencer {

using nlohmann::json;

namespace {

std::string type_name(const json& v) { return v.type_name(); }

void reject_unknown(const json& obj, const std::string& pointer, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) throw ValidationError(pointer + "/" + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& pointer, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(pointer + "/" + key, "required key is missing");
  return *it;
}

const json& require_object(const json& v, const std::string& pointer) {
  if (!v.is_object()) throw ValidationError(pointer.empty() ? "/" : pointer, "expected an object, got " + type_name(v));
  return v;
}

long require_integer(const json& v, const std::string& pointer, long lo, long hi) {
  if (!v.is_number_integer()) throw ValidationError(pointer, "expected an integer, got " + type_name(v));
  const long x = v.get<long>();
  if (x < lo || x > hi)
    throw ValidationError(pointer, "value " + std::to_string(x) + " outside " + std::to_string(lo) + ".." +
                                       std::to_string(hi));
  return x;
}

// c_i given as a number, "p/q", or an expression in H and a, e.g. "3H^2", "aH^2", "-1/2".
ParamPoly parse_chern_entry(const json& v, int degree, const std::string& pointer) {
  if (v.is_number()) return ParamPoly(parse_json_rational(v, pointer));
  if (!v.is_string()) throw ValidationError(pointer, "expected a number or string, got " + type_name(v));
  detail::SymbolPolynomial poly;
  try {
    poly = detail::parse_symbol_polynomial(v.get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(pointer, e.what());
  }
  std::optional<unsigned> h_power;
  std::vector<Rational> coeffs;
  for (const auto& [mono, c] : poly) {
    unsigned h = 0, a = 0;
    for (const auto& [sym, e] : mono) {
      if (sym == 'H')
        h = e;
      else if (sym == 'a')
        a = e;
      else
        throw ValidationError(pointer, std::string("unknown symbol '") + sym + "' (only H and a are allowed)");
    }
    if (h != 0 && h != static_cast<unsigned>(degree))
      throw ValidationError(pointer, "c_" + std::to_string(degree) + " must be a multiple of H^" +
                                         std::to_string(degree) + ", found H^" + std::to_string(h));
    if (h_power && *h_power != h) throw ValidationError(pointer, "mixed powers of H in one Chern class");
    h_power = h;
    if (coeffs.size() <= a) coeffs.resize(a + 1);
    coeffs[a] += c;
  }
  return ParamPoly(std::move(coeffs));
}

BundleClass parse_bundle(const json& doc, int n, std::string& kind) {
  const std::string ptr = "/bundle";
  require_object(doc, ptr);
  if (doc.contains("builtin")) {
    reject_unknown(doc, ptr, {"builtin", "a"});
    const json& b = doc["builtin"];
    if (!b.is_string() || b.get<std::string>() != "psu2")
      throw ValidationError(ptr + "/builtin", "unknown builtin bundle (expected \"psu2\")");
    kind = "psu2";
    ParamPoly a(1);
    if (auto it = doc.find("a"); it != doc.end()) {
      if (it->is_string() && it->get<std::string>() == "symbolic")
        a = ParamPoly::parameter();
      else
        a = ParamPoly(parse_json_rational(*it, ptr + "/a"));
    }
    return psu2_adjoint_bundle(n, a);
  }
  reject_unknown(doc, ptr, {"rank", "chern"});
  kind = "explicit";
  const int rank = static_cast<int>(require_integer(require(doc, ptr, "rank"), ptr + "/rank", 0, 64));
  std::vector<ParamPoly> classes;
  if (auto it = doc.find("chern"); it != doc.end()) {
    if (!it->is_array()) throw ValidationError(ptr + "/chern", "expected an array, got " + type_name(*it));
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = ptr + "/chern/" + std::to_string(i);
      ParamPoly c = parse_chern_entry((*it)[i], static_cast<int>(i) + 1, p);
      if (static_cast<int>(i) + 1 > rank && !c.is_zero() && static_cast<int>(i) + 1 <= n)
        throw ValidationError(p, "c_" + std::to_string(i + 1) + " must vanish for a rank " + std::to_string(rank) +
                                     " bundle");
      classes.push_back(std::move(c));
    }
  }
  if (static_cast<int>(classes.size()) > rank) classes.resize(static_cast<std::size_t>(rank));
  try {
    return BundleClass::from_chern_numbers(RingDescriptor{n}, rank, classes);
  } catch (const ValidationError& e) {
    throw ValidationError(ptr, e.what());
  }
}

CheckKind parse_check(const json& v, const std::string& pointer) {
  if (!v.is_string()) throw ValidationError(pointer, "expected a check name, got " + type_name(v));
  const std::string s = v.get<std::string>();
  for (CheckKind c : {CheckKind::mirror, CheckKind::nilpotency, CheckKind::obstruction, CheckKind::perturbation,
                      CheckKind::operator_difference})
    if (s == to_string(c)) return c;
  throw ValidationError(pointer, "unknown check '" + s + "'");
}

json toml_to_json(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    json out = json::object();
    for (const auto& [k, v] : *t) out[std::string(k.str())] = toml_to_json(v);
    return out;
  }
  if (const auto* a = node.as_array()) {
    json out = json::array();
    for (const auto& v : *a) out.push_back(toml_to_json(v));
    return out;
  }
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return i->get();
  if (const auto* f = node.as_floating_point()) return f->get();
  if (const auto* b = node.as_boolean()) return b->get();
  throw ValidationError("TOML dates and times are not supported");
}

}  // namespace

const char* to_string(CheckKind c) {
  switch (c) {
    case CheckKind::mirror: return "mirror";
    case CheckKind::nilpotency: return "nilpotency";
    case CheckKind::obstruction: return "obstruction";
    case CheckKind::perturbation: return "perturbation";
    case CheckKind::operator_difference: return "operator_difference";
  }
  return "?";
}

SpencerComplexSpec InputSpec::complex_spec() const {
  return SpencerComplexSpec(projective, bundle, weight(), "a");
}

std::optional<DualWeight> InputSpec::weight() const {
  if (!lie || !lambda) return std::nullopt;
  return DualWeight(*lie, *lambda);
}

Rational parse_json_rational(const json& value, const std::string& pointer) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number_float())
    throw ValidationError(pointer, "floating-point numbers are not exact; write a \"p/q\" string instead");
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(pointer, e.what());
    }
  }
  throw ValidationError(pointer, "expected an integer or \"p/q\" string, got " + type_name(value));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("empty entry in rational list '" + text + "'");
    out.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ValidationError("empty rational list");
  return out;
}

std::size_t max_degree_cap() {
  const char* env = std::getenv("SPENCER_RR_MAX_DEGREE");
  if (!env || !*env) return 4;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 16)
    throw ValidationError("SPENCER_RR_MAX_DEGREE must be an integer in 0..16, got '" + std::string(env) + "'");
  return static_cast<std::size_t>(v);
}

json load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read input file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.extension() == ".toml") {
    try {
      return toml_to_json(toml::parse(text, path.string()));
    } catch (const toml::parse_error& e) {
      std::ostringstream msg;
      msg << "TOML parse error at line " << e.source().begin.line << ": " << e.description();
      throw ValidationError(msg.str());
    }
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
}

LieAlgebraData parse_lie_document(const json& doc, const std::string& pointer) {
  require_object(doc, pointer);
  if (doc.contains("builtin")) {
    reject_unknown(doc, pointer, {"builtin"});
    const json& b = doc["builtin"];
    if (!b.is_string() || b.get<std::string>() != "su2")
      throw ValidationError(pointer + "/builtin", "unknown builtin algebra (expected \"su2\")");
    return LieAlgebraData::su2();
  }
  reject_unknown(doc, pointer, {"dim", "brackets"});
  const long dim = require_integer(require(doc, pointer, "dim"), pointer + "/dim", 1, 64);
  LieAlgebraData alg(static_cast<std::size_t>(dim));
  const json& brackets = require(doc, pointer, "brackets");
  if (!brackets.is_array()) throw ValidationError(pointer + "/brackets", "expected an array");

  std::set<std::array<long, 3>> given;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const std::string p = pointer + "/brackets/" + std::to_string(i);
    const json& entry = brackets[i];
    if (!entry.is_array() || entry.size() != 4)
      throw ValidationError(p, "expected [a, b, c, coefficient] with 1-based indices");
    const long a = require_integer(entry[0], p + "/0", 1, dim);
    const long b = require_integer(entry[1], p + "/1", 1, dim);
    const long c = require_integer(entry[2], p + "/2", 1, dim);
    const Rational r = parse_json_rational(entry[3], p + "/3");
    if (!given.insert({a, b, c}).second) throw ValidationError(p, "duplicate bracket entry");
    alg.f(static_cast<std::size_t>(c - 1), static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = r;
  }
  // Fill antisymmetric partners that were not written out.
  for (const auto& [a, b, c] : given)
    if (!given.count({b, a, c}))
      alg.f(static_cast<std::size_t>(c - 1), static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) =
          -alg.f(static_cast<std::size_t>(c - 1), static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  try {
    const LieValidity v = validate_lie(alg);
    alg.compact_flag = v.negative_definite;
  } catch (const ValidationError& e) {
    throw ValidationError(pointer + "/brackets", e.what());
  }
  return alg;
}

InputSpec parse_input(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"base", "bundle", "lie", "lambda", "checks", "max_degree"});

  const json& base = require_object(require(doc, "", "base"), "/base");
  reject_unknown(base, "/base", {"projective"});
  const int n = static_cast<int>(require_integer(require(base, "/base", "projective"), "/base/projective", 0, 8));

  std::string kind;
  BundleClass bundle = parse_bundle(require(doc, "", "bundle"), n, kind);
  InputSpec spec{n, std::move(bundle), kind, std::nullopt, std::nullopt, {}, 2, doc};

  if (auto it = doc.find("lie"); it != doc.end()) spec.lie = parse_lie_document(*it, "/lie");

  if (auto it = doc.find("lambda"); it != doc.end()) {
    if (!it->is_array()) throw ValidationError("/lambda", "expected an array of rationals");
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < it->size(); ++i)
      coords.push_back(parse_json_rational((*it)[i], "/lambda/" + std::to_string(i)));
    if (!spec.lie) {
      if (spec.bundle_kind != "psu2")
        throw ValidationError("/lambda", "lambda needs a \"lie\" entry (su2 is implied only for the psu2 bundle)");
      spec.lie = LieAlgebraData::su2();
    }
    if (coords.size() != spec.lie->dim())
      throw ValidationError("/lambda", "expected " + std::to_string(spec.lie->dim()) + " coordinates, got " +
                                           std::to_string(coords.size()));
    spec.lambda = std::move(coords);
  }

  const std::size_t cap = max_degree_cap();
  if (auto it = doc.find("max_degree"); it != doc.end())
    spec.max_degree = static_cast<std::size_t>(require_integer(*it, "/max_degree", 1, static_cast<long>(cap)));
  else
    spec.max_degree = std::min<std::size_t>(2, cap);

  if (auto it = doc.find("checks"); it != doc.end()) {
    if (!it->is_array()) throw ValidationError("/checks", "expected an array of check names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = "/checks/" + std::to_string(i);
      const CheckKind c = parse_check((*it)[i], p);
      if (c != CheckKind::mirror && !spec.lambda)
        throw ValidationError(p, std::string("check '") + to_string(c) + "' needs \"lambda\"");
      if (std::find(spec.checks.begin(), spec.checks.end(), c) != spec.checks.end())
        throw ValidationError(p, "duplicate check");
      spec.checks.push_back(c);
    }
  }
  return spec;
}

}  // namespace spencer
