#pragma once

#include "ppdacert/ppda.hpp"
#include "ppdacert/rational.hpp"
#include "ppdacert/verdict.hpp"

#include <string_view>
#include <variant>

namespace ppdacert {

// All vectors are dense over the automaton's index sets: u, l and v over
// triples <pZq>, r over pairs pZ. Entries for triples whose return
// probability is structurally zero must be 0 wherever a strict inequality is
// involved; the verifiers recompute that zero set themselves.

/// [pZq] <= u[pZq] for every triple.
struct UpperCert {
  RatVec u;
  bool strict = false;
  friend bool operator==(const UpperCert&, const UpperCert&) = default;
};

/// l <= [pZq] <= u, with [pZq] < u on the non-zero triples.
struct LowerCert {
  RatVec l;
  RatVec u;
  friend bool operator==(const LowerCert&, const LowerCert&) = default;
};

/// The automaton is PAST and ert<pZ> <= r[pZ] for every pair.
struct PastCert {
  RatVec u;
  RatVec r;
  friend bool operator==(const PastCert&, const PastCert&) = default;
};

/// The automaton is cPAST: f'(u) has a positive strictly sub-invariant vector
/// on the non-zero triples, so the spectral radius at the least fixed point
/// is below one.
struct CpastCert {
  RatVec u;
  RatVec v;
  friend bool operator==(const CpastCert&, const CpastCert&) = default;
};

using Certificate = std::variant<UpperCert, LowerCert, PastCert, CpastCert>;

/// "upper", "lower", "past" or "cpast".
std::string_view kind_name(const Certificate& cert);

// Verifiers use exact rational arithmetic only and list every violated
// constraint. A vector of the wrong length throws std::invalid_argument.

/// f(u) <= u. Strict: u = 0 on the zero set and f(u) < u on the rest.
Verdict verify_upper(const Ppda& ppda, const UpperCert& cert);

/// l <= f(l), l <= u, u = l = 0 on the zero set and f(u) < u on the rest.
Verdict verify_lower(const Ppda& ppda, const LowerCert& cert);

/// f(u) <= u, r >= 1 and M(u) r + 1 <= r with M(u) from runtime_system.
Verdict verify_past(const Ppda& ppda, const PastCert& cert);

/// f(u) <= u, v = 0 on the zero set, and on the remaining triples v > 0 and
/// g'(u) v < v, where g is the cleaned fundamental system.
Verdict verify_cpast(const Ppda& ppda, const CpastCert& cert);

Verdict verify(const Ppda& ppda, const Certificate& cert);

}  // namespace ppdacert
