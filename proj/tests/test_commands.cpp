#include "ppdacert/certfile.hpp"
#include "ppdacert/commands.hpp"
#include "ppdacert/families.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

using namespace ppdacert;
using ppdacert::test::fig1_triples;
using ppdacert::test::q;
using ppdacert::test::vec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run capture(F&& f) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

const std::string kFig1 = serialize_ppda(fig1_ppda());

}  // namespace

TEST_CASE("parse_epsilon is exact") {
  CHECK(parse_epsilon("1e-9") == q("1/1000000000"));
  CHECK(parse_epsilon("0.001") == q("1/1000"));
  CHECK(parse_epsilon("25e-4") == q("1/400"));
  CHECK(parse_epsilon("1/3") == q("1/3"));
  CHECK(parse_epsilon("2E1") == 20);
  CHECK_THROWS_AS(parse_epsilon("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_epsilon("1e"), std::invalid_argument);
  CHECK_THROWS_AS(parse_epsilon("-1"), std::invalid_argument);
}

TEST_CASE("parse command exit codes") {
  auto parse = [](const std::string& text, Validation mode) {
    return capture([&](auto& o, auto& e) { return cmd_parse(text, mode, std::nullopt, o, e); });
  };
  CHECK(parse(kFig1, Validation::strict).code == kExitOk);
  const Run sum = parse("states: p q\nalphabet: Z\ntrans p Z 9/10 p -\ntrans q Z 1 q -\n", Validation::strict);
  CHECK(sum.code == kExitProbability);
  CHECK(sum.err.find("p Z") != std::string::npos);
  const Run undeclared = parse("states: p\nalphabet: Z\n\ntrans p Y 1 p -\n", Validation::lenient);
  CHECK(undeclared.code == kExitSyntax);
  CHECK(undeclared.err.find("line 4") != std::string::npos);

  const Ppda f4 = fig4_ppda(1);
  const Run warn = capture([&](auto& o, auto& e) {
    return cmd_parse(serialize_ppda(f4), Validation::lenient, std::string("p:bot"), o, e);
  });
  CHECK(warn.code == kExitOk);
  CHECK(warn.err.find("warning: q bot") == std::string::npos);
}

TEST_CASE("verify command") {
  const Ppda m = fig1_ppda();
  const auto verify = [&](const Certificate& c) {
    const std::string text = write_certificate(m, c);
    return capture([&](auto& o, auto& e) { return cmd_verify(kFig1, text, o, e); });
  };
  CHECK(verify(PastCert{fig1_triples("3/5", "1/2", "1"), vec({"45/14", "1"})}).code == kExitOk);
  const Run bad = verify(PastCert{fig1_triples("3/5", "1/2", "1"), vec({"3/2", "1"})});
  CHECK(bad.code == kExitRejected);
  CHECK(bad.out.find("p Z") != std::string::npos);
  CHECK(bad.out.find("69/40") != std::string::npos);

  const std::string other = write_certificate(delta_a_ppda(q("1/2")), UpperCert{vec({"1"}), false});
  CHECK(capture([&](auto& o, auto& e) { return cmd_verify(kFig1, other, o, e); }).code == kExitModelMismatch);
  CHECK(capture([&](auto& o, auto& e) { return cmd_verify(kFig1, "garbage", o, e); }).code == kExitSyntax);
}

TEST_CASE("bounds command") {
  ApproxConfig cfg;
  cfg.epsilon = q("1/1000000");
  const Run fig1 = capture([&](auto& o, auto& e) { return cmd_bounds(kFig1, cfg, o, e); });
  CHECK(fig1.code == kExitOk);
  CHECK(fig1.out.find("bound p Z p lower") != std::string::npos);
  CHECK(fig1.out.find("approx [0.585786") != std::string::npos);
  CHECK(fig1.out.find("status ok") != std::string::npos);

  cfg.epsilon = q("1/1000");
  const std::string half = serialize_ppda(delta_a_ppda(q("1/2")));
  const Run h = capture([&](auto& o, auto& e) { return cmd_bounds(half, cfg, o, e); });
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("upper strict unavailable") != std::string::npos);
  CHECK(h.out.find("approx [0.999") != std::string::npos);
}

TEST_CASE("fig4 bounds bracket 1/16 for n = 2") {
  ApproxConfig cfg;
  cfg.epsilon = q("1/4096");
  const std::string f4 = serialize_ppda(fig4_ppda(2));
  const Run r = capture([&](auto& o, auto& e) { return cmd_bounds(f4, cfg, o, e); });
  CHECK(r.code == kExitOk);
  const std::regex line(R"(bound q Z1 q lower (\d+/\d+) upper (\d+/\d+))");
  std::smatch m;
  REQUIRE(std::regex_search(r.out, m, line));
  CHECK(test::q(m[1].str().c_str()) <= q("1/16"));
  CHECK(q("1/16") <= test::q(m[2].str().c_str()));
}

TEST_CASE("certify then verify") {
  ApproxConfig cfg;
  cfg.epsilon = q("1/1000000");
  for (const char* kind : {"upper", "lower", "past", "cpast"}) {
    const Run c = capture([&](auto& o, auto& e) { return cmd_certify(kFig1, kind, cfg, false, 100, o, e); });
    REQUIRE(c.code == kExitOk);
    CHECK(c.out.rfind(std::string("cert ") + kind, 0) == 0);
    CHECK(capture([&](auto& o, auto& e) { return cmd_verify(kFig1, c.out, o, e); }).code == kExitOk);
  }
  const std::string half = serialize_ppda(delta_a_ppda(q("1/2")));
  CHECK(capture([&](auto& o, auto& e) { return cmd_certify(half, "past", cfg, false, 30, o, e); }).code ==
        kExitRejected);
  CHECK(capture([&](auto& o, auto& e) { return cmd_certify(half, "weird", cfg, false, 30, o, e); }).code ==
        kExitSyntax);
}

TEST_CASE("decide, pbpa, gen and simulate commands") {
  const Run d = capture([&](auto& o, auto& e) { return cmd_decide(kFig1, 50, o, e); });
  CHECK(d.code == kExitOk);
  CHECK(d.out.rfind("PAST", 0) == 0);
  CHECK(d.out.find("cert past v1") != std::string::npos);

  const std::string three = serialize_ppda(delta_a_ppda(q("3/4")));
  const Run p = capture([&](auto& o, auto& e) { return cmd_pbpa(three, o, e); });
  CHECK(p.out.find("runtime Z = 2/1") != std::string::npos);
  CHECK(capture([&](auto& o, auto& e) { return cmd_pbpa(kFig1, o, e); }).code == kExitRejected);

  const Run g = capture([&](auto& o, auto& e) { return cmd_gen("fig4", "2", o, e); });
  CHECK(g.code == kExitOk);
  CHECK(model_hash(parse_ppda(g.out)) == model_hash(fig4_ppda(2)));
  CHECK(capture([&](auto& o, auto& e) { return cmd_gen("fig4", "x", o, e); }).code == kExitSyntax);

  const auto sim = [&] {
    return capture([&](auto& o, auto& e) { return cmd_simulate(kFig1, "p:Z", 2000, 100, 9, o, e); });
  };
  const Run s1 = sim();
  CHECK(s1.code == kExitOk);
  CHECK(s1.out == sim().out);
  CHECK(capture([&](auto& o, auto& e) { return cmd_simulate(kFig1, "p:Q", 10, 10, 9, o, e); }).code == kExitSyntax);
}

TEST_CASE("the verification path never touches floating point") {
  const std::string root = PPDACERT_SOURCE_DIR;
  const std::regex float_use(R"(\b(double|float|long double|get_d|mpf_class|std::sqrt|std::pow)\b)");
  for (const char* file :
       {"src/rational.cpp", "src/pps.cpp", "src/linear.cpp", "src/ppda.cpp", "src/systems.cpp", "src/verify.cpp",
        "src/certfile.cpp", "src/cmd_verify.cpp", "include/ppdacert/rational.hpp", "include/ppdacert/pps.hpp",
        "include/ppdacert/linear.hpp", "include/ppdacert/ppda.hpp", "include/ppdacert/systems.hpp",
        "include/ppdacert/certificates.hpp", "include/ppdacert/certfile.hpp", "include/ppdacert/verdict.hpp"}) {
    std::ifstream in(root + "/" + file);
    REQUIRE_MESSAGE(in.good(), file);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    CHECK_MESSAGE(!std::regex_search(text, float_use), file);
  }
}
