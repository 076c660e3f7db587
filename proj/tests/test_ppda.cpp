#include "ppdacert/families.hpp"
#include "ppdacert/linear.hpp"
#include "ppdacert/systems.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ppdacert;
using ppdacert::test::q;
using ppdacert::test::vec;

namespace {

constexpr const char* kFig1Text = R"(# two states, one symbol
states: p q
alphabet: Z
trans p Z 1/4 p Z Z
trans p Z 1/2 p -
trans p Z 1/4 q -
trans q Z 1 q -
)";

std::size_t tri(const Ppda& m, const char* p, const char* z, const char* r) {
  return m.tri_id({*m.find_state(p), *m.find_symbol(z), *m.find_state(r)});
}

}  // namespace

TEST_CASE("parse the worked example") {
  const Ppda m = parse_ppda(kFig1Text, Validation::strict);
  CHECK(m.num_states() == 2);
  CHECK(m.num_symbols() == 1);
  CHECK(m.transitions().size() == 4);
  CHECK(m.tri_name(1) == "p Z q");
  CHECK(m.pair_name(1) == "q Z");
  CHECK(m.transitions()[0].push.size() == 2);
}

TEST_CASE("parse errors carry a kind and a line") {
  SUBCASE("undeclared symbol") {
    try {
      parse_ppda("states: p\nalphabet: Z\ntrans p Y 1 p -\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::syntax);
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("weight sum below one is a probability error in strict mode only") {
    const char* text = "states: p\nalphabet: Z\ntrans p Z 9/10 p -\n";
    CHECK_NOTHROW(parse_ppda(text, Validation::lenient));
    try {
      parse_ppda(text, Validation::strict);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::probability);
      CHECK(std::string(e.what()).find("p Z") != std::string::npos);
    }
  }
  SUBCASE("weight sum above one is always an error") {
    CHECK_THROWS_AS(parse_ppda("states: p\nalphabet: Z\ntrans p Z 1 p -\ntrans p Z 1/2 p -\n"), ParseError);
  }
  SUBCASE("push of three symbols") {
    CHECK_THROWS_AS(parse_ppda("states: p\nalphabet: Z\ntrans p Z 1 p Z Z Z\n"), ParseError);
  }
  SUBCASE("empty transition list") {
    const char* text = "states: p\nalphabet: Z\n";
    CHECK_NOTHROW(parse_ppda(text, Validation::lenient));
    CHECK_THROWS_AS(parse_ppda(text, Validation::strict), ParseError);
  }
}

TEST_CASE("canonical serialization and hash") {
  const Ppda m = parse_ppda(kFig1Text);
  const std::string canon = serialize_ppda(m);
  const Ppda again = parse_ppda(canon);
  CHECK(serialize_ppda(again) == canon);
  CHECK(model_hash(again) == model_hash(m));
  const Ppda spaced = parse_ppda("  states:   p q  \n\n# note\nalphabet: Z\ntrans p Z 2/8 p Z Z\ntrans p Z 1/2 p -\n"
                                 "trans p Z 1/4 q -   # pop\ntrans q Z 1/1 q -");
  CHECK(model_hash(spaced) == model_hash(m));
  CHECK(model_hash(m).size() == 64);
  CHECK(model_hash(fig1_ppda()) == model_hash(m));
}

TEST_CASE("fundamental system of the worked example") {
  const Ppda m = fig1_ppda();
  const Pps f = fundamental_system(m);
  CHECK(f.size() == 4);
  CHECK(f.degree() == 2);
  const CleanupResult c = cleanup(f);
  CHECK(c.zero_set == std::vector<std::size_t>{tri(m, "q", "Z", "p")});

  // Substituting <qZq> = 1 and <qZp> = 0 yields the two-variable system.
  const Pps g = substitute(f, {{tri(m, "q", "Z", "q"), Rational(1)}, {tri(m, "q", "Z", "p"), Rational(0)}});
  REQUIRE(g.size() == 2);
  const Pps hand = test::fig1_hand_system();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const RatVec x = test::random_point(rng, 2);
    CHECK(eval_pps(g, x) == eval_pps(hand, x));
  }
}

TEST_CASE("fundamental system of small automata") {
  const Pps d = fundamental_system(delta_a_ppda(q("3/4")));
  REQUIRE(d.size() == 1);
  CHECK(d.polynomial(0) == Polynomial{{q("3/4"), {}}, {q("1/4"), {{0, 2U}}}});

  const Ppda pop({"p"}, {"Z"}, {{StateId(0), SymbolId(0), Rational(1), StateId(0), {}}});
  const Pps f = fundamental_system(pop);
  CHECK(f.polynomial(0) == Polynomial{{Rational(1), {}}});
}

TEST_CASE("per-pair return probabilities stay sub-stochastic under f") {
  for (const Ppda& m : {fig1_ppda(), fig4_ppda(2), fig5_ppda(2), delta_a_ppda(q("2/3"))}) {
    const Pps f = fundamental_system(m);
    const RatVec x = constant_vector(f.size(), Rational(1, m.num_states()));
    const RatVec fx = eval_pps(f, x);
    for (std::size_t pz = 0; pz < m.pair_count(); ++pz) {
      const PairIndex pair = m.pair_at(pz);
      Rational sum = 0;
      for (std::uint32_t t = 0; t < m.num_states(); ++t) sum += fx[m.tri_id({pair.p, pair.z, StateId(t)})];
      CHECK(sum <= 1);
    }
  }
}

TEST_CASE("moment systems: Jacobian and direct construction agree") {
  std::mt19937_64 rng(5);
  std::vector<Ppda> models{fig1_ppda(), fig4_ppda(1), fig4_ppda(2), fig5_ppda(1), delta_a_ppda(q("3/4"))};
  for (int i = 0; i < 20; ++i) models.push_back(test::random_ppda(rng));
  for (const Ppda& m : models) {
    const RatVec probs = test::random_point(rng, m.tri_count(), 6);
    const LinearSystem a = moments_system(m, probs);
    const LinearSystem b = moments_system_direct(m, probs);
    CHECK(a.matrix == b.matrix);
    CHECK(a.constant == b.constant);
  }
}

TEST_CASE("moment system examples") {
  const Ppda pop({"p"}, {"Z"}, {{StateId(0), SymbolId(0), Rational(1), StateId(0), {}}});
  const LinearSystem s = moments_system(pop, vec({"1"}));
  CHECK(solve_linear_least(s.matrix, s.constant) == vec({"1"}));

  // For pBPA at probs = 1 the moment system is the runtime system.
  const Ppda d = delta_a_ppda(q("3/4"));
  const LinearSystem mom = moments_system(d, vec({"1"}));
  const LinearSystem rt = runtime_system(d, vec({"1"}));
  CHECK(mom.matrix == rt.matrix);
  CHECK(solve_linear_least(rt.matrix, rt.constant) == vec({"2"}));
}

TEST_CASE("runtime system of the worked example") {
  const Ppda m = fig1_ppda();
  const LinearSystem rt = runtime_system(m, test::fig1_triples("3/5", "1/2", "1"));
  CHECK(rt.matrix.at(0, 0) == q("2/5"));
  CHECK(rt.matrix.at(0, 1) == q("1/8"));
  CHECK(rt.matrix.row(1).empty());
  CHECK(solve_linear_least(rt.matrix, rt.constant) == vec({"15/8", "1"}));

  const Ppda pop({"p"}, {"Z"}, {{StateId(0), SymbolId(0), Rational(1), StateId(0), {}}});
  CHECK(solve_linear_least(runtime_system(pop, vec({"1"})).matrix, vec({"1"})) == vec({"1"}));
}

TEST_CASE("deadlocks make the runtime infinite") {
  const Ppda m = parse_ppda("states: p\nalphabet: Z\ntrans p Z 1/2 p -\n", Validation::lenient);
  CHECK(deadlocked_pairs(m) == std::vector<std::size_t>{0});
  const LinearSystem rt = runtime_system(m, vec({"1/2"}));
  CHECK_FALSE(solve_linear_least(rt.matrix, rt.constant).has_value());
  CHECK_FALSE(pbpa_past_decide(m).past);
}

TEST_CASE("pBPA decision") {
  for (const char* a : {"3/5", "3/4", "9/10"}) {
    const PbpaDecision d = pbpa_past_decide(delta_a_ppda(q(a)));
    REQUIRE(d.past);
    CHECK(d.runtimes == RatVec{1 / (2 * q(a) - 1)});
  }
  CHECK_FALSE(pbpa_past_decide(delta_a_ppda(q("1/2"))).past);
  const PbpaDecision third = pbpa_past_decide(delta_a_ppda(q("1/3")));
  CHECK_FALSE(third.past);
  CHECK(third.reason.find("-3/1") != std::string::npos);
  CHECK_THROWS_AS(pbpa_past_decide(fig1_ppda()), std::invalid_argument);
}

TEST_CASE("families") {
  const Ppda f4 = fig4_ppda(1);
  CHECK(f4.states() == std::vector<std::string>{"p", "q", "r"});
  CHECK(f4.alphabet() == std::vector<std::string>{"bot", "Z1", "X"});
  const Ppda d = gen_family("delta_a", "3/4");
  CHECK(d.num_states() == 1);
  REQUIRE(d.transitions().size() == 2);
  CHECK(d.transitions()[0].weight == q("3/4"));
  CHECK(d.transitions()[0].push.empty());
  CHECK(d.transitions()[1].push.size() == 2);
  CHECK_THROWS_AS(gen_family("delta_a", "1"), std::invalid_argument);
  CHECK_THROWS_AS(gen_family("fig4", "0"), std::invalid_argument);
  CHECK_THROWS_AS(gen_family("fig9", "1"), std::invalid_argument);
  // Encoding size is linear in n.
  CHECK(fig4_ppda(8).transitions().size() - fig4_ppda(7).transitions().size() == 2);
}

TEST_CASE("reachable pairs") {
  const Ppda m = fig4_ppda(2);
  const auto reach = reachable_pairs(m, parse_pair(m, "p:bot"));
  const auto has = [&](const char* text) {
    const PairIndex pz = parse_pair(m, text);
    return std::find(reach.begin(), reach.end(), m.pair_id(pz)) != reach.end();
  };
  CHECK(has("p:bot"));
  CHECK(has("q:Z1"));
  CHECK(has("q:X"));
  CHECK(has("p:X"));
  CHECK_FALSE(has("r:X"));
  CHECK_THROWS_AS(parse_pair(m, "p-bot"), std::invalid_argument);
}
