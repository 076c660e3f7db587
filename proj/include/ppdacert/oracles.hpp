#pragma once

#include "ppdacert/ppda.hpp"
#include "ppdacert/pps.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ppdacert {

// Independent ground truth for tests. Nothing here feeds a verdict.

struct Exploration {
  /// Per target state q: total mass of proper paths ending in q.
  RatVec prob_lb;
  /// Per target state q: sum of mass * length over those paths.
  RatVec moment_lb;
  /// Largest number of live configurations in one breadth-first layer.
  std::size_t peak_layer = 0;
};

/// Breadth-first enumeration of all paths of length <= step_cap whose stack
/// never exceeds stack_cap symbols, with exact path masses. Both results are
/// lower bounds on [pZq] and E[pZq], nondecreasing in the caps. Throws
/// std::runtime_error when a layer exceeds node_limit configurations.
Exploration truncated_explore(const Ppda& ppda, PairIndex start, std::size_t step_cap, std::size_t stack_cap,
                              std::size_t node_limit = 1'000'000);

/// Same, from an arbitrary stack (stack[0] on top). An empty stack yields zeros.
Exploration truncated_explore(const Ppda& ppda, StateId state, const std::vector<SymbolId>& stack,
                              std::size_t step_cap, std::size_t stack_cap, std::size_t node_limit = 1'000'000);

/// Monte Carlo run statistics from one start pair.
struct SimStats {
  std::uint64_t seed = 0;
  PairIndex start{};
  std::uint64_t runs = 0;
  /// Per state: runs that emptied the stack there.
  std::vector<std::uint64_t> hits;
  /// Runs stopped at step_cap, counted with length step_cap.
  std::uint64_t capped = 0;
  /// Runs that reached a configuration with missing outgoing mass.
  std::uint64_t deadlocked = 0;
  std::uint64_t sum_length = 0;
  std::uint64_t sum_squared_length = 0;

  double probability(std::size_t state) const;
  double probability_stderr(std::size_t state) const;
  double mean_length() const;
  double mean_length_stderr() const;
};

/// `runs` independent runs from `start`, each until the stack empties, a
/// deadlock, or `step_cap` steps. Randomness comes from std::mt19937_64
/// seeded with `seed`; each step draws one 53-bit integer k and takes the
/// first rule (in declaration order) with k < ceil(2^53 * cumulative weight).
/// Identical inputs give bit-identical statistics on every platform.
SimStats simulate(const Ppda& ppda, PairIndex start, std::uint64_t runs, std::uint64_t step_cap, std::uint64_t seed);

/// Power iteration on A + I for a square non-negative matrix; returns the
/// estimate of rho(A) once the relative change drops below 1e-12. Throws
/// std::runtime_error if that does not happen within max_iterations.
double spectral_radius_est(const RatMat& m, std::size_t max_iterations = 1'000'000);

}  // namespace ppdacert
