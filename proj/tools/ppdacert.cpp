#include "ppdacert/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ppdacert;

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

// Writes to `path`, or stdout when empty.
int emit(const std::string& path, const std::string& text, int code) {
  if (path.empty()) {
    std::cout << text;
    return code;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return kExitSyntax;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds, certificates and termination analysis for probabilistic pushdown automata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ppdacert 0.1.0");

  std::string file;
  std::string cert_file;
  std::string out_file;
  std::string eps_text = "1e-9";
  std::string method = "newton";
  std::string kind;
  std::string start;
  std::string a_text;
  unsigned n = 1;
  bool strict = false;
  bool lenient = false;
  const std::size_t default_iter = default_max_iterations(100000);
  const std::size_t default_decide = default_max_iterations(200);
  std::size_t max_iter = 0;
  std::uint64_t runs = 100000;
  std::uint64_t cap = 10000;
  std::uint64_t seed = 1;

  auto* parse = app.add_subcommand("parse", "Validate a model file");
  parse->add_option("file", file, "model file")->required();
  auto* strict_flag = parse->add_flag("--strict", strict, "require weight sum 1 for every pair with rules");
  parse->add_flag("--lenient", lenient, "allow weight sums below 1 (deadlocks)")->excludes(strict_flag);
  parse->add_option("--start", start, "initial pair p:Z for reachability warnings");

  const auto add_approx = [&](CLI::App* sub) {
    sub->add_option("--eps", eps_text, "target gap, e.g. 1e-9 or 1/1000")->capture_default_str();
    sub->add_option("--method", method, "kleene or newton")
        ->check(CLI::IsMember({"kleene", "newton"}))
        ->capture_default_str();
    sub->add_option("--max-iter", max_iter, "iteration budget (default from PPDACERT_MAX_ITER)");
  };

  auto* bounds = app.add_subcommand("bounds", "Certified bounds on return probabilities");
  bounds->add_option("file", file, "model file")->required();
  add_approx(bounds);

  auto* certify = app.add_subcommand("certify", "Synthesize a certificate");
  certify->add_option("file", file, "model file")->required();
  certify->add_option("kind", kind, "upper, lower, past or cpast")
      ->required()
      ->check(CLI::IsMember({"upper", "lower", "past", "cpast"}));
  certify->add_flag("--strict", strict, "strict upper bound");
  certify->add_option("-o,--output", out_file, "certificate file (default stdout)");
  add_approx(certify);

  auto* verify = app.add_subcommand("verify", "Check a certificate in exact arithmetic");
  verify->add_option("file", file, "model file")->required();
  verify->add_option("cert", cert_file, "certificate file")->required();

  auto* decide = app.add_subcommand("decide", "Semi-decide PAST / non-AST");
  decide->add_option("file", file, "model file")->required();
  decide->add_option("--max-iter", max_iter, "iteration budget (default from PPDACERT_MAX_ITER, else 200)");

  auto* pbpa = app.add_subcommand("pbpa", "Exact PAST decision for single-state models");
  pbpa->add_option("file", file, "model file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a model family");
  gen->add_option("kind", kind, "fig1, delta_a, fig4 or fig5")
      ->required()
      ->check(CLI::IsMember({"fig1", "delta_a", "fig4", "fig5"}));
  gen->add_option("--n", n, "size parameter for fig4 and fig5")->capture_default_str();
  gen->add_option("--a", a_text, "pop probability for delta_a, e.g. 3/4");
  gen->add_option("-o,--output", out_file, "model file (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimates");
  sim->add_option("file", file, "model file")->required();
  sim->add_option("--start", start, "start pair p:Z")->required();
  sim->add_option("--runs", runs, "number of runs")->capture_default_str();
  sim->add_option("--cap", cap, "step cap per run")->capture_default_str();
  sim->add_option("--seed", seed, "seed of the mt19937_64 generator")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  std::string model;
  if (!gen->parsed() && !read_file(file, model)) return kExitSyntax;

  ApproxConfig cfg;
  if (bounds->parsed() || certify->parsed()) {
    try {
      cfg.epsilon = parse_epsilon(eps_text);
      cfg.method = method == "kleene" ? Method::kleene : Method::newton;
      cfg.max_iterations = max_iter > 0 ? max_iter : default_iter;
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitSyntax;
    }
  }

  std::ostringstream out;
  int code = kExitOk;
  if (parse->parsed()) {
    return cmd_parse(model, strict ? Validation::strict : Validation::lenient,
                     start.empty() ? std::nullopt : std::optional<std::string>(start), std::cout, std::cerr);
  }
  if (bounds->parsed()) return cmd_bounds(model, cfg, std::cout, std::cerr);
  if (certify->parsed()) {
    code = cmd_certify(model, kind, cfg, strict, max_iter > 0 ? max_iter : default_decide, out, std::cerr);
    return code == kExitOk ? emit(out_file, out.str(), code) : code;
  }
  if (verify->parsed()) {
    std::string cert;
    if (!read_file(cert_file, cert)) return kExitSyntax;
    return cmd_verify(model, cert, std::cout, std::cerr);
  }
  if (decide->parsed()) return cmd_decide(model, max_iter > 0 ? max_iter : default_decide, std::cout, std::cerr);
  if (pbpa->parsed()) return cmd_pbpa(model, std::cout, std::cerr);
  if (gen->parsed()) {
    code = cmd_gen(kind, kind == "delta_a" ? a_text : std::to_string(n), out, std::cerr);
    return code == kExitOk ? emit(out_file, out.str(), code) : code;
  }
  return cmd_simulate(model, start, runs, cap, seed, std::cout, std::cerr);
}
