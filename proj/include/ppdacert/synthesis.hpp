#pragma once

#include "ppdacert/certificates.hpp"
#include "ppdacert/ppda.hpp"
#include "ppdacert/solver.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace ppdacert {

// Synthesis approximates the least fixed point of the cleaned fundamental
// system in floating point, then searches exact rational candidates
//   u = ceil(x + delta * d),  delta = 2^-3, 2^-4, ..., 2^-60
// where d solves (I - f'(x)) d = 1, scaled to max-norm 1. Moving along d
// lowers f(u) - u by roughly delta in every component, which is what makes
// strict candidates succeed on badly conditioned systems. The search begins
// at the first delta small enough for the requested gap and keeps the first
// candidate that passes the exact check. Every result is re-verified.

struct UpperSynthesis {
  /// Set when an inductive (or strictly inductive) point was found.
  std::optional<UpperCert> cert;
  /// Lower bound on the return probabilities, full length.
  RatVec lower;
  /// True when (lower, cert->u) passes verify_lower. Otherwise `lower`
  /// comes from rounded Kleene iteration: sound, but without a certificate.
  bool lower_certified = false;
  /// max |u - lower|.
  Rational gap;
  bool gap_met = false;
  std::string failure;

  bool ok() const { return cert.has_value() && gap_met; }
};

UpperSynthesis synth_upper(const Ppda& ppda, const ApproxConfig& cfg, bool strict);

struct LowerSynthesis {
  std::optional<LowerCert> cert;
  Rational gap;
  std::string failure;
};

/// A certified pair l <= [pZq] <= u with max |u - l| <= epsilon.
LowerSynthesis synth_lower(const Ppda& ppda, const ApproxConfig& cfg);

struct CpastSynthesis {
  std::optional<CpastCert> cert;
  std::string failure;
};

/// Strict upper bound u plus v close to (I - f'(u))^-1 1, falling back to v = 1.
CpastSynthesis synth_cpast(const Ppda& ppda, const ApproxConfig& cfg);

enum class PastOutcome { past, non_ast, unknown };

struct PastDecision {
  PastOutcome outcome = PastOutcome::unknown;
  /// Verified PAST certificate when outcome is past.
  std::optional<PastCert> cert;
  /// Last verified upper bound on the return probabilities.
  UpperCert witness;
  /// For non_ast: a pair whose bounded termination probability is below 1.
  std::optional<PairIndex> pair;
  Rational witness_sum;
  std::size_t iterations = 0;
};

/// Semi-decision procedure over a decreasing sequence of verified upper
/// bounds u(i), starting from the all-ones vector. Each round:
///   (a) solve r = M(u(i)) r + 1 exactly; a solution gives a PAST certificate;
///   (b) if sum_t u(i)[pZt] < 1 for a pair pZ, the automaton is not AST;
///   (c) otherwise tighten u and repeat.
/// Returns unknown after max_iter rounds. AST automata that are not PAST
/// always end there.
PastDecision decide_past(const Ppda& ppda, std::size_t max_iter);

std::string_view outcome_name(PastOutcome outcome);

}  // namespace ppdacert
