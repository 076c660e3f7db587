#pragma once

#include "ppdacert/pps.hpp"
#include "ppdacert/ppda.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppdacert {

/// x = A x + b.
struct LinearSystem {
  RatMat matrix;
  RatVec constant;
};

/// Quadratic system over all |Q|^2 |Gamma| triples whose least solution is
/// the vector of return probabilities:
///   <pZq> = sum over pZ->q (pop) of a
///         + sum over pZ->rY of a <rYq>
///         + sum over pZ->rYX of a * sum_t <rYt><tXq>
Pps fundamental_system(const Ppda& ppda);

/// Linear system of first termination moments, x = f'(probs) x + probs, built
/// from the Jacobian of the fundamental system.
LinearSystem moments_system(const Ppda& ppda, const RatVec& probs);

/// The same system read off the transitions directly:
///   E<pZq> = [pZq] + sum a E<rYq> + sum a sum_t (E<rYt>[tXq] + [rYt]E<tXq>).
LinearSystem moments_system_direct(const Ppda& ppda, const RatVec& probs);

/// Expected-runtime system r = M(u) r + 1 over pairs. A rule pZ->rY adds a to
/// M[pZ, rY]; a rule pZ->rYX adds a to M[pZ, rY] and a*u[rYt] to M[pZ, tX].
/// A pair with missing outgoing mass (deadlock) gets an extra unit self-loop,
/// so any run that can reach it has infinite runtime.
LinearSystem runtime_system(const Ppda& ppda, const RatVec& u);

/// Exact PAST decision for single-state automata: PAST iff r = 1 + f'(1) r has
/// a unique solution with every component >= 1; that solution is the vector
/// of expected runtimes per stack symbol.
struct PbpaDecision {
  bool past = false;
  RatVec runtimes;
  std::string reason;
};
PbpaDecision pbpa_past_decide(const Ppda& ppda);

/// Pairs pZ occurring as a top configuration on some run from `start`
/// (including start), ascending by pair id.
std::vector<std::size_t> reachable_pairs(const Ppda& ppda, PairIndex start);

}  // namespace ppdacert
