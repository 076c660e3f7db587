#pragma once

#include "ppdacert/pps.hpp"
#include "ppdacert/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ppdacert {

enum class Method { kleene, newton };

struct ApproxConfig {
  Method method = Method::newton;
  /// Target max-norm gap; must be positive.
  Rational epsilon{1, 1000000000};
  std::size_t max_iterations = 100000;
  /// Safe rounding keeps denominators at most 2^round_bits.
  unsigned round_bits = 64;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Iteration budget from PPDACERT_MAX_ITER when set, else `fallback`.
std::size_t default_max_iterations(std::size_t fallback = 100000);

/// Kleene iteration from 0 with safe rounding:
///   l_{k+1} = max(l_k, round_down(f(l_k))).
/// The result satisfies 0 <= l <= lfp and l <= f(l) exactly. Stops once the
/// estimated remaining distance (from the contraction of successive steps) is
/// within epsilon, or after max_iterations steps. Expects a clean system with a
/// finite least fixed point.
RatVec kleene_lower(const Pps& pps, const ApproxConfig& cfg);

/// Same iteration, but stops as soon as max|upper - l| <= epsilon, where
/// `upper` is a known upper bound on the least fixed point.
RatVec kleene_lower(const Pps& pps, const ApproxConfig& cfg, const RatVec& upper);

/// Double-precision Newton iteration x += (I - f'(x))^-1 (f(x) - x) from 0,
/// halving the step when the residual does not improve. Falls back to plain
/// Kleene iteration when the linear solve fails or the iterate diverges.
/// Advisory only: every verdict downstream is re-checked exactly.
std::vector<double> newton_approx(const Pps& pps, const ApproxConfig& cfg);

enum class Rounding { down, up };

/// Componentwise k / 2^bits rounding below (down) or above (up) each float,
/// clamped at zero. Throws std::invalid_argument on NaN or infinity.
RatVec rationalize(std::span<const double> point, Rounding direction, unsigned bits);

/// Direction d with d - f'(x) d roughly 1: the solution of (I - f'(x)) d = 1
/// scaled to max-norm 1. Falls back to the all-ones vector when the solve
/// fails or the solution is not strictly positive.
std::vector<double> improvement_direction(const Pps& pps, std::span<const double> point);

}  // namespace ppdacert
