#include "ppdacert/commands.hpp"

#include "ppdacert/certfile.hpp"
#include "ppdacert/families.hpp"
#include "ppdacert/oracles.hpp"
#include "ppdacert/pps.hpp"
#include "ppdacert/synthesis.hpp"
#include "ppdacert/systems.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ppdacert {

namespace {

std::string bracket(const Rational& lo, const Rational& hi) {
  return "approx [" + to_decimal(lo) + ", " + to_decimal(hi) + "]";
}

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void warn_deadlocks(const Ppda& ppda, const std::optional<PairIndex>& start, std::ostream& err) {
  std::vector<std::size_t> pairs = deadlocked_pairs(ppda);
  if (start) {
    const auto reach = reachable_pairs(ppda, *start);
    std::erase_if(pairs, [&](std::size_t pz) { return !std::binary_search(reach.begin(), reach.end(), pz); });
  }
  for (const auto pz : pairs) {
    err << "warning: " << ppda.pair_name(pz) << " has outgoing weight " << to_string(ppda.mass(pz))
        << " and can deadlock" << (start ? " (reachable from the start pair)" : "") << '\n';
  }
}

void print_cert(const Ppda& ppda, const Certificate& cert, std::ostream& out) {
  out << write_certificate(ppda, cert);
}

}  // namespace

Rational parse_epsilon(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  std::string mantissa;
  long exponent = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
  }
  if (mantissa.empty()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  if (i < text.size()) {
    const std::string exp_text(text.substr(i + 1));
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (exp_text.empty() || used != exp_text.size() || e < -100000 || e > 100000) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    exponent += e;
  }
  Rational value(mpz_class(mantissa, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) value /= scale;
  else value *= scale;
  value.canonicalize();
  return value;
}

int cmd_parse(std::string_view model, Validation mode, const std::optional<std::string>& start, std::ostream& out,
              std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, mode, err, code);
  if (!ppda) return code;
  std::optional<PairIndex> start_pair;
  if (start) {
    try {
      start_pair = parse_pair(*ppda, *start);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitSyntax;
    }
  }
  warn_deadlocks(*ppda, start_pair, err);
  out << "ok: " << ppda->num_states() << " states, " << ppda->num_symbols() << " symbols, "
      << ppda->transitions().size() << " transitions\n";
  out << "model " << model_hash(*ppda) << '\n';
  return kExitOk;
}

int cmd_bounds(std::string_view model, const ApproxConfig& cfg, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, Validation::lenient, err, code);
  if (!ppda) return code;
  cfg.validate();

  out << "model " << model_hash(*ppda) << '\n';
  out << "method " << (cfg.method == Method::newton ? "newton" : "kleene") << '\n';
  out << "epsilon " << to_string(cfg.epsilon) << '\n';

  UpperSynthesis result = synth_upper(*ppda, cfg, true);
  if (result.cert) {
    out << "upper strict\n";
  } else {
    out << "upper strict unavailable: " << result.failure << '\n';
    result = synth_upper(*ppda, cfg, false);
    if (!result.cert) {
      out << "upper unavailable: " << result.failure << '\n';
      return kExitRejected;
    }
    out << "upper non-strict\n";
  }
  out << "lower " << (result.lower_certified ? "certified" : "kleene") << '\n';

  const CleanupResult cleaned = cleanup(fundamental_system(*ppda));
  for (const auto k : cleaned.kept) {
    out << "bound " << ppda->tri_name(k) << " lower " << to_string(result.lower[k]) << " upper "
        << to_string(result.cert->u[k]) << ' ' << bracket(result.lower[k], result.cert->u[k]) << '\n';
  }
  out << "zero " << cleaned.zero_set.size() << " triples\n";
  out << "gap " << to_string(result.gap) << " approx " << to_decimal(result.gap) << '\n';
  if (!result.gap_met) {
    out << "status gap not met\n";
    return kExitRejected;
  }
  out << "status ok\n";
  return kExitOk;
}

int cmd_certify(std::string_view model, std::string_view kind, const ApproxConfig& cfg, bool strict,
                std::size_t decide_budget, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, Validation::lenient, err, code);
  if (!ppda) return code;

  if (kind == "upper") {
    const UpperSynthesis r = synth_upper(*ppda, cfg, strict);
    if (!r.ok()) {
      err << "error: " << r.failure << '\n';
      return kExitRejected;
    }
    print_cert(*ppda, *r.cert, out);
  } else if (kind == "lower") {
    const LowerSynthesis r = synth_lower(*ppda, cfg);
    if (!r.cert) {
      err << "error: " << r.failure << '\n';
      return kExitRejected;
    }
    print_cert(*ppda, *r.cert, out);
  } else if (kind == "past") {
    const PastDecision d = decide_past(*ppda, decide_budget);
    if (!d.cert) {
      err << "error: no PAST certificate (" << outcome_name(d.outcome) << " after " << d.iterations
          << " iterations)\n";
      return kExitRejected;
    }
    print_cert(*ppda, *d.cert, out);
  } else if (kind == "cpast") {
    const CpastSynthesis r = synth_cpast(*ppda, cfg);
    if (!r.cert) {
      err << "error: " << r.failure << '\n';
      return kExitRejected;
    }
    print_cert(*ppda, *r.cert, out);
  } else {
    err << "error: unknown certificate kind '" << kind << "'\n";
    return kExitSyntax;
  }
  return kExitOk;
}

int cmd_decide(std::string_view model, std::size_t max_iter, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, Validation::lenient, err, code);
  if (!ppda) return code;

  const PastDecision d = decide_past(*ppda, max_iter);
  out << outcome_name(d.outcome) << " after " << d.iterations << " iterations\n";
  switch (d.outcome) {
    case PastOutcome::past:
      for (std::size_t pz = 0; pz < ppda->pair_count(); ++pz) {
        out << "runtime " << ppda->pair_name(pz) << " <= " << to_string(d.cert->r[pz]) << " approx "
            << to_decimal(d.cert->r[pz]) << '\n';
      }
      print_cert(*ppda, *d.cert, out);
      break;
    case PastOutcome::non_ast:
      out << "pair " << ppda->pair_name(ppda->pair_id(*d.pair)) << " terminates with probability <= "
          << to_string(d.witness_sum) << " approx " << to_decimal(d.witness_sum) << '\n';
      print_cert(*ppda, d.witness, out);
      break;
    case PastOutcome::unknown:
      break;
  }
  return kExitOk;
}

int cmd_pbpa(std::string_view model, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, Validation::lenient, err, code);
  if (!ppda) return code;
  if (ppda->num_states() != 1) {
    err << "error: the pBPA decision needs exactly one state, the model has " << ppda->num_states() << '\n';
    return kExitRejected;
  }
  const PbpaDecision d = pbpa_past_decide(*ppda);
  if (!d.past) {
    out << "not PAST: " << d.reason << '\n';
    return kExitOk;
  }
  out << "PAST\n";
  for (std::size_t z = 0; z < ppda->num_symbols(); ++z) {
    out << "runtime " << ppda->alphabet()[z] << " = " << to_string(d.runtimes[z]) << " approx "
        << to_decimal(d.runtimes[z]) << '\n';
  }
  return kExitOk;
}

int cmd_gen(std::string_view kind, std::string_view param, std::ostream& out, std::ostream& err) {
  try {
    const Ppda ppda = gen_family(kind, param);
    out << "# family " << kind;
    if (kind != "fig1") out << ' ' << param;
    out << '\n' << serialize_ppda(ppda);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitSyntax;
  }
}

int cmd_simulate(std::string_view model, std::string_view start, std::uint64_t runs, std::uint64_t cap,
                 std::uint64_t seed, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, Validation::lenient, err, code);
  if (!ppda) return code;
  PairIndex pair;
  try {
    pair = parse_pair(*ppda, start);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitSyntax;
  }
  if (runs < 1) {
    err << "error: runs must be at least 1\n";
    return kExitSyntax;
  }
  const SimStats s = simulate(*ppda, pair, runs, cap, seed);
  out << "start " << ppda->pair_name(ppda->pair_id(pair)) << " runs " << s.runs << " cap " << cap << " seed " << s.seed
      << '\n';
  for (std::size_t q = 0; q < ppda->num_states(); ++q) {
    out << "return " << ppda->states()[q] << " hits " << s.hits[q] << " estimate " << fixed(s.probability(q))
        << " stderr " << fixed(s.probability_stderr(q)) << '\n';
  }
  out << "capped " << s.capped << " deadlocked " << s.deadlocked << '\n';
  out << "length mean " << fixed(s.mean_length()) << " stderr " << fixed(s.mean_length_stderr())
      << (s.capped > 0 ? " (capped runs counted at the cap)" : "") << '\n';
  return kExitOk;
}

}  // namespace ppdacert
