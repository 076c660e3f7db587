#include "ppdacert/families.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace ppdacert {

namespace {

StateId st(std::uint32_t i) { return StateId(i); }
SymbolId sym(std::uint32_t i) { return SymbolId(i); }

std::vector<std::string> chain_alphabet(const std::string& bottom, unsigned n) {
  std::vector<std::string> alphabet{bottom};
  for (unsigned i = 1; i <= n; ++i) alphabet.push_back("Z" + std::to_string(i));
  alphabet.push_back("X");
  return alphabet;
}

// Z_{i-1} -> Z_i Z_i for 1 < i <= n and Z_n -> X X, all staying in `s`.
// Symbol layout: 0 = bottom, 1..n = Z_i, n+1 = X.
void add_squaring(std::vector<Transition>& rules, StateId s, unsigned n) {
  for (unsigned i = 2; i <= n; ++i) rules.push_back({s, sym(i - 1), Rational(1), s, {sym(i), sym(i)}});
  rules.push_back({s, sym(n), Rational(1), s, {sym(n + 1), sym(n + 1)}});
}

}  // namespace

Ppda fig1_ppda() {
  const StateId p = st(0);
  const StateId q = st(1);
  const SymbolId z = sym(0);
  return Ppda({"p", "q"}, {"Z"},
              {{p, z, Rational(1, 4), p, {z, z}},
               {p, z, Rational(1, 2), p, {}},
               {p, z, Rational(1, 4), q, {}},
               {q, z, Rational(1), q, {}}});
}

Ppda delta_a_ppda(const Rational& a) {
  if (a <= 0 || a >= 1) throw std::invalid_argument("delta_a needs 0 < a < 1, got " + to_string(a));
  const StateId p = st(0);
  const SymbolId z = sym(0);
  return Ppda({"p"}, {"Z"}, {{p, z, a, p, {}}, {p, z, Rational(1 - a), p, {z, z}}});
}

Ppda fig4_ppda(unsigned n) {
  if (n < 1) throw std::invalid_argument("fig4 needs n >= 1");
  const StateId p = st(0);
  const StateId q = st(1);
  const StateId r = st(2);
  const SymbolId bot = sym(0);
  const SymbolId x = sym(n + 1);
  std::vector<Transition> rules;
  rules.push_back({p, bot, Rational(1), q, {sym(1), bot}});
  rules.push_back({p, x, Rational(1), p, {}});
  for (unsigned i = 2; i <= n; ++i) rules.push_back({p, sym(i), Rational(1), p, {}});
  add_squaring(rules, q, n);
  rules.push_back({q, x, Rational(1, 2), q, {}});
  rules.push_back({q, x, Rational(1, 2), p, {}});
  rules.push_back({q, bot, Rational(1), r, {}});
  return Ppda({"p", "q", "r"}, chain_alphabet("bot", n), std::move(rules));
}

Ppda fig5_ppda(unsigned n) {
  if (n < 1) throw std::invalid_argument("fig5 needs n >= 1");
  const StateId p = st(0);
  const StateId r = st(1);
  const StateId s = st(2);
  const SymbolId y = sym(0);
  const SymbolId x = sym(n + 1);
  std::vector<Transition> rules;
  rules.push_back({p, y, Rational(1), s, {sym(1), y}});
  for (const auto& [self, other] : {std::pair{s, r}, std::pair{r, s}}) {
    add_squaring(rules, self, n);
    rules.push_back({self, x, Rational(3, 4), self, {}});
    rules.push_back({self, x, Rational(1, 4), other, {}});
  }
  rules.push_back({s, y, Rational(1), p, {}});
  rules.push_back({r, y, Rational(1), p, {y, y}});
  return Ppda({"p", "r", "s"}, chain_alphabet("Y", n), std::move(rules));
}

Ppda gen_family(std::string_view kind, std::string_view param) {
  const auto parse_n = [&]() {
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), n);
    if (ec != std::errc() || ptr != param.data() + param.size() || n < 1) {
      throw std::invalid_argument("expected an integer n >= 1, got '" + std::string(param) + "'");
    }
    return n;
  };
  if (kind == "fig1") return fig1_ppda();
  if (kind == "delta_a") return delta_a_ppda(parse_rational(param));
  if (kind == "fig4") return fig4_ppda(parse_n());
  if (kind == "fig5") return fig5_ppda(parse_n());
  throw std::invalid_argument("unknown family '" + std::string(kind) + "'");
}

}  // namespace ppdacert
