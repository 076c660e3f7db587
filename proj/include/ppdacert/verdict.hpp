#pragma once

#include "ppdacert/rational.hpp"

#include <string>
#include <vector>

namespace ppdacert {

/// One failed constraint: `lhs <op> rhs` did not hold at `index`.
struct Violation {
  std::string constraint;
  std::string index;
  Rational lhs;
  Rational rhs;
};

/// Result of an exact check. Accepted iff no constraint was violated;
/// violations are listed in constraint order, then index order.
struct Verdict {
  std::vector<Violation> violations;

  bool accepted() const { return violations.empty(); }
  const Violation& first() const { return violations.front(); }
};

std::string describe(const Violation& v);

}  // namespace ppdacert
