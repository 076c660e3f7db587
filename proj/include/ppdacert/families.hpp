#pragma once

#include "ppdacert/ppda.hpp"

#include <string_view>

namespace ppdacert {

/// Two states p, q, one symbol Z:
///   pZ -1/4-> pZZ,  pZ -1/2-> p,  pZ -1/4-> q,  qZ -1-> q.
Ppda fig1_ppda();

/// One state, one symbol: Z -a-> pop, Z -(1-a)-> ZZ. Requires 0 < a < 1.
Ppda delta_a_ppda(const Rational& a);

/// Repeated-squaring family with minimal non-zero return probability
/// [q Z1 q] = 2^(-2^n) and doubly exponential runtime from p bot.
/// States p q r; alphabet bot Z1..Zn X. Requires n >= 1.
Ppda fig4_ppda(unsigned n);

/// Family simulating Y -a_n-> pop, Y -(1-a_n)-> YY with a_n = [s Z1 s] =
/// 1/2 + 2^-(2^n+1), via 2^n steps of the two-state chain with stay
/// probability 3/4. States p r s; alphabet Y Z1..Zn X. Requires n >= 1.
Ppda fig5_ppda(unsigned n);

/// Dispatches on "fig1", "delta_a", "fig4", "fig5". `param` is n for fig4/fig5
/// and a rational a for delta_a; ignored for fig1.
Ppda gen_family(std::string_view kind, std::string_view param);

}  // namespace ppdacert
