#pragma once

#include "ppdacert/pps.hpp"
#include "ppdacert/rational.hpp"

#include <optional>

namespace ppdacert {

/// Unique solution of system * x = rhs by exact Gaussian elimination, pivoting
/// on the first non-zero entry of each column. nullopt when singular.
std::optional<RatVec> solve_exact(const RatMat& system, const RatVec& rhs);

/// Least non-negative solution of x = A x + b when it is finite; nullopt
/// when some component is infinite. Variables that are structurally zero are
/// removed first; the remaining system is solved exactly and the answer is
/// re-checked against x = A x + b.
std::optional<RatVec> solve_linear_least(const RatMat& a, const RatVec& b);

}  // namespace ppdacert
