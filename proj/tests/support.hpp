#pragma once

#include "ppdacert/ppda.hpp"
#include "ppdacert/pps.hpp"
#include "ppdacert/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ppdacert::test {

inline Rational q(const char* text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

inline RatVec vec(std::initializer_list<const char*> values) {
  RatVec out;
  for (const char* v : values) out.push_back(q(v));
  return out;
}

// Exact comparisons against sqrt(2).
inline bool below_sqrt2(const Rational& x) { return x < 0 || x * x < 2; }
inline bool above_sqrt2(const Rational& x) { return x > 0 && x * x > 2; }

/// fig1 triples in index order: pZp, pZq, qZp, qZq.
inline RatVec fig1_triples(const char* pzp, const char* pzq, const char* qzq) {
  return vec({pzp, pzq, "0", qzq});
}

/// The two-variable system x_p = 1/4 x_p^2 + 1/2, x_q = 1/4 x_p x_q + 1/4 x_q + 1/4
/// obtained from fig1 by fixing <qZq> = 1 and <qZp> = 0.
inline Pps fig1_hand_system() {
  return Pps({"x_p", "x_q"},
             {{{q("1/4"), {{0, 2U}}}, {q("1/2"), {}}},
              {{q("1/4"), {{0, 1U}, {1, 1U}}}, {q("1/4"), {{1, 1U}}}, {q("1/4"), {}}}});
}

inline Rational random_rational(std::mt19937_64& rng, unsigned max_den) {
  std::uniform_int_distribution<unsigned> den_dist(1, max_den);
  const unsigned den = den_dist(rng);
  std::uniform_int_distribution<unsigned> num_dist(0, 2 * den);
  Rational r(num_dist(rng), den);
  r.canonicalize();
  return r;
}

/// Random quadratic PPS with every variable reachable from a constant, so
/// the system is clean.
inline Pps random_clean_pps(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(1, 4);
  const std::size_t n = size_dist(rng);
  std::uniform_int_distribution<std::size_t> var_dist(0, n - 1);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<int> deg_dist(0, 2);
  std::vector<Polynomial> polys(n);
  for (std::size_t i = 0; i < n; ++i) {
    polys[i].push_back({Rational(1, 1 + static_cast<unsigned>(rng() % 8)), {}});
    const int terms = count_dist(rng);
    for (int t = 0; t < terms; ++t) {
      Monomial m{Rational(1 + static_cast<unsigned>(rng() % 3), 2 + static_cast<unsigned>(rng() % 6)), {}};
      const int deg = deg_dist(rng);
      if (deg == 1) {
        m.powers = {{var_dist(rng), 1U}};
      } else if (deg == 2) {
        const std::size_t a = var_dist(rng);
        const std::size_t b = var_dist(rng);
        if (a == b) m.powers = {{a, 2U}};
        else m.powers = {{std::min(a, b), 1U}, {std::max(a, b), 1U}};
      }
      m.coeff.canonicalize();
      polys[i].push_back(std::move(m));
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return Pps(std::move(names), std::move(polys));
}

inline RatVec random_point(std::mt19937_64& rng, std::size_t n, unsigned max_den = 12) {
  RatVec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng, max_den));
  return out;
}

/// Random probabilistic automaton with 1-2 states and 1-2 symbols. Every
/// pair has rules with weights summing to one; pops are favoured so most
/// instances terminate quickly.
inline Ppda random_ppda(std::mt19937_64& rng) {
  const std::uint32_t nq = 1 + static_cast<std::uint32_t>(rng() % 2);
  const std::uint32_t ng = 1 + static_cast<std::uint32_t>(rng() % 2);
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  for (std::uint32_t i = 0; i < nq; ++i) states.push_back("s" + std::to_string(i));
  for (std::uint32_t i = 0; i < ng; ++i) alphabet.push_back("A" + std::to_string(i));
  std::vector<Transition> rules;
  for (std::uint32_t p = 0; p < nq; ++p) {
    for (std::uint32_t z = 0; z < ng; ++z) {
      const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
      // Split 8 eighths into k positive parts.
      std::vector<unsigned> parts(k, 1);
      for (unsigned left = 8 - k; left > 0; --left) ++parts[rng() % k];
      for (unsigned j = 0; j < k; ++j) {
        const unsigned roll = static_cast<unsigned>(rng() % 10);
        const std::size_t push_len = roll < 5 ? 0 : roll < 7 ? 1 : 2;
        std::vector<SymbolId> push;
        for (std::size_t s = 0; s < push_len; ++s) push.push_back(SymbolId(static_cast<std::uint32_t>(rng() % ng)));
        rules.push_back({StateId(p), SymbolId(z), Rational(parts[j], 8), StateId(static_cast<std::uint32_t>(rng() % nq)),
                         std::move(push)});
        rules.back().weight.canonicalize();
      }
    }
  }
  return Ppda(std::move(states), std::move(alphabet), std::move(rules));
}

}  // namespace ppdacert::test
