#include "ppdacert/synthesis.hpp"

#include "ppdacert/linear.hpp"
#include "ppdacert/pps.hpp"
#include "ppdacert/systems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ppdacert {

namespace {

constexpr unsigned kFirstExponent = 3;
constexpr unsigned kLastExponent = 60;
// Candidates are rounded to a grid a few bits finer than delta.
constexpr unsigned kExtraBits = 6;

struct Approximation {
  Pps full;
  CleanupResult cleaned;
  RatVec point;      // floating-point estimate of the lfp, converted exactly
  RatVec direction;  // inflation direction, max-norm 1
  // Bits needed to resolve the smallest direction component.
  unsigned direction_bits = 0;
};

Approximation approximate(const Ppda& ppda, const ApproxConfig& cfg) {
  Approximation a;
  a.full = fundamental_system(ppda);
  a.cleaned = cleanup(a.full);
  const Pps& g = a.cleaned.clean;
  std::vector<double> x;
  if (cfg.method == Method::newton) {
    x = newton_approx(g, cfg);
  } else {
    for (const auto& v : kleene_lower(g, cfg)) x.push_back(v.get_d());
  }
  const std::vector<double> d = improvement_direction(g, x);
  double smallest = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    a.point.emplace_back(std::max(x[k], 0.0));
    a.direction.emplace_back(d[k]);
    if (d[k] > 0) smallest = std::min(smallest, d[k]);
  }
  a.direction_bits = static_cast<unsigned>(std::min(64.0, std::ceil(-std::log2(smallest))));
  return a;
}

unsigned grid_bits(const Approximation& a, unsigned exponent, const ApproxConfig& cfg) {
  return std::min(exponent + kExtraBits + a.direction_bits, std::max(cfg.round_bits, 1U));
}

RatVec shifted(const Approximation& a, unsigned exponent, unsigned bits, bool up) {
  const Rational delta = pow2(-static_cast<long>(exponent));
  RatVec out;
  out.reserve(a.point.size());
  for (std::size_t k = 0; k < a.point.size(); ++k) {
    if (up) {
      out.push_back(ceil_dyadic(a.point[k] + delta * a.direction[k], bits));
    } else {
      const Rational v = floor_dyadic(a.point[k] - delta * a.direction[k], bits);
      out.push_back(v > 0 ? v : Rational(0));
    }
  }
  return out;
}

RatVec rounded_point(const Approximation& a, unsigned bits) {
  RatVec out;
  for (const auto& v : a.point) out.push_back(ceil_dyadic(v, bits));
  return out;
}

bool co_inductive(const Pps& g, const RatVec& l) {
  const RatVec fl = eval_pps(g, l);
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (!(l[k] <= fl[k])) return false;
  }
  return true;
}

// Exponents in search order: from the first one whose 2*delta fits epsilon
// down to the finest, then back up through the coarser ones.
std::vector<unsigned> search_order(const Rational& epsilon) {
  unsigned start = kLastExponent;
  for (unsigned i = kFirstExponent; i <= kLastExponent; ++i) {
    if (2 * pow2(-static_cast<long>(i)) <= epsilon) {
      start = i;
      break;
    }
  }
  std::vector<unsigned> order;
  for (unsigned i = start; i <= kLastExponent; ++i) order.push_back(i);
  for (unsigned i = start; i > kFirstExponent; --i) order.push_back(i - 1);
  return order;
}

}  // namespace

UpperSynthesis synth_upper(const Ppda& ppda, const ApproxConfig& cfg, bool strict) {
  cfg.validate();
  UpperSynthesis out;
  const Approximation a = approximate(ppda, cfg);
  const Pps& g = a.cleaned.clean;
  const std::size_t n = ppda.tri_count();

  std::optional<RatVec> u;
  unsigned chosen = 0;
  for (const unsigned i : search_order(cfg.epsilon)) {
    const unsigned bits = grid_bits(a, i, cfg);
    for (const RatVec& candidate : {shifted(a, i, bits, true), rounded_point(a, bits)}) {
      if (check_inductive(g, candidate, strict).accepted()) {
        u = candidate;
        break;
      }
    }
    if (u) {
      chosen = i;
      break;
    }
  }
  if (!u && !strict) {
    // Inductive for single-state automata whose weights sum to at most one.
    const RatVec ones = constant_vector(g.size(), Rational(1));
    if (check_inductive(g, ones, false).accepted()) {
      u = ones;
      chosen = kFirstExponent;
    }
  }
  if (!u) {
    out.lower = expand(kleene_lower(g, cfg), a.cleaned.kept, n);
    out.failure = strict ? "no strictly inductive point found; the fundamental system is likely singular at its "
                           "least fixed point (not cPAST)"
                         : "no inductive point found within the search schedule";
    return out;
  }

  const bool is_strict = strict || check_inductive(g, *u, true).accepted();
  RatVec l = zeros(g.size());
  if (is_strict) {
    // Any co-inductive l <= u is a certified lower bound once u is strict, and
    // the componentwise max of such points is again one.
    for (unsigned i = chosen; i <= kLastExponent; ++i) {
      const RatVec candidate = shifted(a, i, grid_bits(a, i, cfg), false);
      if (leq(candidate, *u) && co_inductive(g, candidate)) l = componentwise_max(l, candidate);
    }
  }
  if (max_norm_distance(l, *u) > cfg.epsilon) l = componentwise_max(l, kleene_lower(g, cfg, *u));

  out.gap = g.size() == 0 ? Rational(0) : max_norm_distance(l, *u);
  out.gap_met = out.gap <= cfg.epsilon;
  out.cert = UpperCert{expand(*u, a.cleaned.kept, n), strict};
  out.lower = expand(l, a.cleaned.kept, n);
  out.lower_certified = is_strict;
  if (!verify_upper(ppda, *out.cert).accepted()) throw std::logic_error("synthesized upper certificate fails");
  if (is_strict && !verify_lower(ppda, LowerCert{out.lower, out.cert->u}).accepted()) {
    throw std::logic_error("synthesized lower bound fails");
  }
  if (!out.gap_met) out.failure = "gap " + to_decimal(out.gap) + " exceeds epsilon within the iteration budget";
  return out;
}

LowerSynthesis synth_lower(const Ppda& ppda, const ApproxConfig& cfg) {
  LowerSynthesis out;
  const UpperSynthesis upper = synth_upper(ppda, cfg, true);
  if (!upper.cert) {
    out.failure = upper.failure;
    return out;
  }
  out.gap = upper.gap;
  if (!upper.gap_met) {
    out.failure = upper.failure;
    return out;
  }
  out.cert = LowerCert{upper.lower, upper.cert->u};
  return out;
}

CpastSynthesis synth_cpast(const Ppda& ppda, const ApproxConfig& cfg) {
  CpastSynthesis out;
  const UpperSynthesis upper = synth_upper(ppda, cfg, true);
  if (!upper.cert) {
    out.failure = upper.failure;
    return out;
  }
  const RatVec& u = upper.cert->u;
  const CleanupResult cleaned = cleanup(fundamental_system(ppda));
  std::vector<double> point;
  for (const auto k : cleaned.kept) point.push_back(u[k].get_d());
  const std::vector<double> d = improvement_direction(cleaned.clean, point);

  RatVec guided = rationalize(d, Rounding::up, 32);
  for (auto& v : guided) v = std::max(v, pow2(-32));
  for (const RatVec& v : {guided, constant_vector(cleaned.kept.size(), Rational(1))}) {
    CpastCert cert{u, expand(v, cleaned.kept, ppda.tri_count())};
    if (verify_cpast(ppda, cert).accepted()) {
      out.cert = std::move(cert);
      return out;
    }
  }
  out.failure = "no vector v with f'(u) v < v found";
  return out;
}

PastDecision decide_past(const Ppda& ppda, std::size_t max_iter) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  ApproxConfig cfg;
  cfg.max_iterations = default_max_iterations(cfg.max_iterations);
  const Approximation a = approximate(ppda, cfg);
  const Pps& g = a.cleaned.clean;
  const std::size_t n = ppda.tri_count();

  PastDecision out;
  // The componentwise min of inductive points is inductive.
  std::optional<RatVec> best;
  for (std::size_t it = 0; it < max_iter; ++it) {
    out.iterations = it + 1;
    const unsigned i = static_cast<unsigned>(std::min<std::size_t>(kFirstExponent + it, kLastExponent));
    const unsigned bits = i + kExtraBits + a.direction_bits;
    for (const RatVec& candidate : {shifted(a, i, bits, true), rounded_point(a, bits)}) {
      if (check_inductive(g, candidate, false).accepted()) {
        const RatVec full = expand(candidate, a.cleaned.kept, n);
        best = best ? componentwise_min(*best, full) : full;
      }
    }
    if (!best) continue;
    const RatVec& u = *best;
    out.witness = UpperCert{u, false};

    const LinearSystem runtime = runtime_system(ppda, u);
    if (const auto r = solve_linear_least(runtime.matrix, runtime.constant)) {
      PastCert cert{u, *r};
      if (verify_past(ppda, cert).accepted()) {
        out.outcome = PastOutcome::past;
        out.cert = std::move(cert);
        return out;
      }
    }

    for (std::size_t pz = 0; pz < ppda.pair_count(); ++pz) {
      const PairIndex pair = ppda.pair_at(pz);
      Rational sum = 0;
      for (std::size_t q = 0; q < ppda.num_states(); ++q) {
        sum += u[ppda.tri_id({pair.p, pair.z, StateId(static_cast<std::uint32_t>(q))})];
      }
      if (sum < 1 && verify_upper(ppda, out.witness).accepted()) {
        out.outcome = PastOutcome::non_ast;
        out.pair = pair;
        out.witness_sum = sum;
        return out;
      }
    }
  }
  return out;
}

std::string_view outcome_name(PastOutcome outcome) {
  switch (outcome) {
    case PastOutcome::past:
      return "PAST";
    case PastOutcome::non_ast:
      return "non-AST";
    default:
      return "unknown";
  }
}

}  // namespace ppdacert
