#include "cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "spencer/error.hpp"
#include "spencer/io.hpp"
#include "spencer/report.hpp"
#include "spencer/selftest.hpp"

namespace spencer::cli {

namespace {

struct ComputeArgs {
  std::string input;
  std::string output;
  std::string format = "text";
};

struct LieArgs {
  std::string algebra;
  std::string lambda;
  std::optional<std::size_t> max_degree;
  std::string format = "text";
};

struct SelftestArgs {
  bool corrupt_newton = false;
  unsigned long long seed = SelftestOptions{}.seed;
};

int do_compute(const ComputeArgs& args, std::ostream& out) {
  const OutputReport report = run_compute(parse_input(load_document(args.input)));
  const bool to_file = !args.output.empty();
  if (to_file) {
    std::ofstream file(args.output, std::ios::binary);
    if (!file) throw ValidationError("cannot write output file '" + args.output + "'");
    file << dump_json(report.to_json());
  }
  if (args.format == "json" && !to_file)
    out << dump_json(report.to_json());
  else if (args.format == "text")
    out << render_text(report);
  return ok;
}

int do_lie(const LieArgs& args, std::ostream& out) {
  const LieAlgebraData algebra = args.algebra == "su2" ? LieAlgebraData::su2()
                                                       : parse_lie_document(load_document(args.algebra));
  const std::size_t cap = max_degree_cap();
  const std::size_t k = args.max_degree.value_or(std::min<std::size_t>(2, cap));
  if (k > cap)
    throw ValidationError("--max-degree " + std::to_string(k) + " exceeds SPENCER_RR_MAX_DEGREE=" + std::to_string(cap));
  const nlohmann::json report = lie_report(algebra, parse_rational_list(args.lambda), k);
  out << (args.format == "json" ? dump_json(report) : render_lie_text(report));
  return ok;
}

int do_verify(const std::string& format, std::ostream& out) {
  const PaperDiff diff = verify_paper();
  out << (format == "json" ? dump_json(to_json(diff)) : render_text(diff));
  return ok;
}

int do_selftest(const SelftestArgs& args, std::ostream& out) {
  const auto results = run_selftest({args.seed, args.corrupt_newton});
  out << format_selftest(results);
  return all_passed(results) ? ok : check_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-class calculator for Spencer complexes on projective space", "spencer-rr"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Euler characteristics and checks for an input spec");
  c->add_option("--input", compute.input, "JSON or TOML spec")->required();
  c->add_option("--output", compute.output, "write the JSON report here");
  c->add_option("--format", compute.format, "stdout format")->check(CLI::IsMember({"json", "text"}));

  std::string verify_format = "text";
  auto* v = app.add_subcommand("verify-paper", "Reference P^2 computation next to the published values");
  v->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  LieArgs lie;
  auto* l = app.add_subcommand("lie", "Operator-level report for a Lie algebra and weight");
  l->add_option("--algebra", lie.algebra, "su2 or a structure-constant document")->required();
  l->add_option("--lambda", lie.lambda, "comma-separated rationals, e.g. 1,0,-1/2")->required();
  l->add_option("--max-degree", lie.max_degree, "largest Sym degree acted on");
  l->add_option("--format", lie.format)->check(CLI::IsMember({"json", "text"}));

  SelftestArgs self;
  auto* s = app.add_subcommand("selftest", "Run every invariant on seeded random inputs");
  s->add_flag("--corrupt-newton", self.corrupt_newton, "negative control: inject a Newton-identity sign error");
  s->add_option("--seed", self.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : validation_error;
  }

  try {
    if (c->parsed()) return do_compute(compute, out);
    if (v->parsed()) return do_verify(verify_format, out);
    if (l->parsed()) return do_lie(lie, out);
    return do_selftest(self, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return validation_error;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace spencer::cli
