// Python bindings. Rationals cross the boundary as "num/den" strings; the
// Python package turns them into fractions.Fraction.
#include "ppdacert/certfile.hpp"
#include "ppdacert/commands.hpp"
#include "ppdacert/families.hpp"
#include "ppdacert/oracles.hpp"
#include "ppdacert/synthesis.hpp"
#include "ppdacert/systems.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ppdacert;

namespace {

Ppda load(const std::string& text, bool strict) {
  return parse_ppda(text, strict ? Validation::strict : Validation::lenient);
}

ApproxConfig make_config(const std::string& epsilon, const std::string& method, std::size_t max_iter) {
  ApproxConfig cfg;
  cfg.epsilon = parse_epsilon(epsilon);
  if (method == "newton") {
    cfg.method = Method::newton;
  } else if (method == "kleene") {
    cfg.method = Method::kleene;
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  cfg.max_iterations = max_iter == 0 ? default_max_iterations(cfg.max_iterations) : max_iter;
  cfg.validate();
  return cfg;
}

py::dict describe_model(const std::string& text, bool strict) {
  const Ppda m = load(text, strict);
  py::list deadlocks;
  for (const auto pz : deadlocked_pairs(m)) deadlocks.append(m.pair_name(pz));
  py::dict out;
  out["states"] = m.states();
  out["alphabet"] = m.alphabet();
  out["transitions"] = m.transitions().size();
  out["hash"] = model_hash(m);
  out["deadlocked"] = deadlocks;
  out["text"] = serialize_ppda(m);
  return out;
}

py::dict bounds(const std::string& text, const std::string& epsilon, const std::string& method,
                std::size_t max_iter) {
  const Ppda m = load(text, false);
  const ApproxConfig cfg = make_config(epsilon, method, max_iter);
  UpperSynthesis s = synth_upper(m, cfg, true);
  const bool strict = s.cert.has_value();
  if (!strict) s = synth_upper(m, cfg, false);
  if (!s.cert) throw std::runtime_error(s.failure);

  const CleanupResult cleaned = cleanup(fundamental_system(m));
  py::dict table;
  for (const auto k : cleaned.kept) {
    table[py::str(m.tri_name(k))] = py::make_tuple(to_string(s.lower[k]), to_string(s.cert->u[k]));
  }
  py::list zero;
  for (const auto k : cleaned.zero_set) zero.append(m.tri_name(k));
  py::dict out;
  out["strict"] = strict;
  out["lower_certified"] = s.lower_certified;
  out["bounds"] = table;
  out["zero"] = zero;
  out["gap"] = to_string(s.gap);
  out["gap_met"] = s.gap_met;
  out["certificate"] = write_certificate(m, *s.cert);
  return out;
}

std::string certify(const std::string& text, const std::string& kind, const std::string& epsilon, bool strict,
                    std::size_t budget) {
  const Ppda m = load(text, false);
  const ApproxConfig cfg = make_config(epsilon, "newton", 0);
  if (kind == "upper") {
    const UpperSynthesis r = synth_upper(m, cfg, strict);
    if (!r.ok()) throw std::runtime_error(r.failure);
    return write_certificate(m, *r.cert);
  }
  if (kind == "lower") {
    const LowerSynthesis r = synth_lower(m, cfg);
    if (!r.cert) throw std::runtime_error(r.failure);
    return write_certificate(m, *r.cert);
  }
  if (kind == "past") {
    const PastDecision d = decide_past(m, budget);
    if (!d.cert) throw std::runtime_error(std::string("no PAST certificate: ") + std::string(outcome_name(d.outcome)));
    return write_certificate(m, *d.cert);
  }
  if (kind == "cpast") {
    const CpastSynthesis r = synth_cpast(m, cfg);
    if (!r.cert) throw std::runtime_error(r.failure);
    return write_certificate(m, *r.cert);
  }
  throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

py::dict verify_text(const std::string& text, const std::string& certificate) {
  const Ppda m = load(text, false);
  const Certificate cert = read_certificate(m, certificate);
  const Verdict v = verify(m, cert);
  py::list violations;
  for (const auto& x : v.violations) violations.append(describe(x));
  py::dict out;
  out["kind"] = std::string(kind_name(cert));
  out["accepted"] = v.accepted();
  out["violations"] = violations;
  return out;
}

py::dict decide(const std::string& text, std::size_t max_iter) {
  const Ppda m = load(text, false);
  const PastDecision d = decide_past(m, max_iter);
  py::dict out;
  out["outcome"] = std::string(outcome_name(d.outcome));
  out["iterations"] = d.iterations;
  if (d.cert) {
    py::dict runtimes;
    for (std::size_t pz = 0; pz < m.pair_count(); ++pz) runtimes[py::str(m.pair_name(pz))] = to_string(d.cert->r[pz]);
    out["runtimes"] = runtimes;
    out["certificate"] = write_certificate(m, *d.cert);
  }
  if (d.pair) {
    out["pair"] = m.pair_name(m.pair_id(*d.pair));
    out["witness_sum"] = to_string(d.witness_sum);
    out["certificate"] = write_certificate(m, d.witness);
  }
  return out;
}

py::dict pbpa(const std::string& text) {
  const Ppda m = load(text, false);
  if (m.num_states() != 1) throw std::invalid_argument("the pBPA decision needs exactly one state");
  const PbpaDecision d = pbpa_past_decide(m);
  py::dict out;
  out["past"] = d.past;
  out["reason"] = d.reason;
  py::dict runtimes;
  if (d.past) {
    for (std::size_t z = 0; z < m.num_symbols(); ++z) runtimes[py::str(m.alphabet()[z])] = to_string(d.runtimes[z]);
  }
  out["runtimes"] = runtimes;
  return out;
}

py::dict explore(const std::string& text, const std::string& start, std::size_t step_cap, std::size_t stack_cap) {
  const Ppda m = load(text, false);
  const Exploration e = truncated_explore(m, parse_pair(m, start), step_cap, stack_cap);
  py::dict prob;
  py::dict moment;
  for (std::size_t q = 0; q < m.num_states(); ++q) {
    prob[py::str(m.states()[q])] = to_string(e.prob_lb[q]);
    moment[py::str(m.states()[q])] = to_string(e.moment_lb[q]);
  }
  py::dict out;
  out["probability"] = prob;
  out["moment"] = moment;
  out["peak_layer"] = e.peak_layer;
  return out;
}

py::dict simulate_runs(const std::string& text, const std::string& start, std::uint64_t runs, std::uint64_t cap,
                       std::uint64_t seed) {
  const Ppda m = load(text, false);
  const SimStats s = simulate(m, parse_pair(m, start), runs, cap, seed);
  py::dict hits;
  py::dict estimate;
  for (std::size_t q = 0; q < m.num_states(); ++q) {
    hits[py::str(m.states()[q])] = s.hits[q];
    estimate[py::str(m.states()[q])] = py::make_tuple(s.probability(q), s.probability_stderr(q));
  }
  py::dict out;
  out["runs"] = s.runs;
  out["hits"] = hits;
  out["estimate"] = estimate;
  out["capped"] = s.capped;
  out["deadlocked"] = s.deadlocked;
  out["mean_length"] = py::make_tuple(s.mean_length(), s.mean_length_stderr());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certificates for probabilistic pushdown automata";

  py::register_exception<CertFormatError>(m, "CertificateFormatError", PyExc_ValueError);
  py::register_exception<ModelMismatch>(m, "ModelMismatch", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ModelError", PyExc_ValueError);

  m.def("parse", &describe_model, py::arg("text"), py::arg("strict") = false);
  m.def("bounds", &bounds, py::arg("text"), py::arg("epsilon") = "1e-9", py::arg("method") = "newton",
        py::arg("max_iter") = 0);
  m.def("certify", &certify, py::arg("text"), py::arg("kind"), py::arg("epsilon") = "1e-9",
        py::arg("strict") = false, py::arg("budget") = 200);
  m.def("verify", &verify_text, py::arg("text"), py::arg("certificate"));
  m.def("decide", &decide, py::arg("text"), py::arg("max_iter") = 200);
  m.def("pbpa", &pbpa, py::arg("text"));
  m.def("gen", [](const std::string& kind, const std::string& param) { return serialize_ppda(gen_family(kind, param)); },
        py::arg("kind"), py::arg("param") = "");
  m.def("explore", &explore, py::arg("text"), py::arg("start"), py::arg("step_cap"), py::arg("stack_cap"));
  m.def("simulate", &simulate_runs, py::arg("text"), py::arg("start"), py::arg("runs") = 100000,
        py::arg("cap") = 10000, py::arg("seed") = 1);
}
