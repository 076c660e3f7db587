#include "ppdacert/certificates.hpp"

#include "ppdacert/pps.hpp"
#include "ppdacert/systems.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>

namespace ppdacert {

namespace {

struct Context {
  const Ppda& ppda;
  Pps system;
  CleanupResult cleaned;

  explicit Context(const Ppda& automaton)
      : ppda(automaton), system(fundamental_system(automaton)), cleaned(cleanup(system)) {}
};

void require_size(const RatVec& v, std::size_t expected, const char* name) {
  if (v.size() != expected) {
    throw std::invalid_argument(std::string("certificate vector ") + name + " has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(expected));
  }
}

void non_negative(const Context& ctx, const RatVec& v, const char* name, Verdict& out) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) out.violations.push_back({std::string(name) + " >= 0", ctx.ppda.tri_name(i), v[i], Rational(0)});
  }
}

void zero_on_zero_set(const Context& ctx, const RatVec& v, const char* name, Verdict& out) {
  for (const auto z : ctx.cleaned.zero_set) {
    if (v[z] != 0) {
      out.violations.push_back({std::string(name) + " = 0 on zero set", ctx.ppda.tri_name(z), v[z], Rational(0)});
    }
  }
}

void inductive(const Context& ctx, const RatVec& u, Verdict& out) {
  const RatVec fu = eval_pps(ctx.system, u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(fu[i] <= u[i])) out.violations.push_back({"f(u) <= u", ctx.ppda.tri_name(i), fu[i], u[i]});
  }
}

// f(u) < u on the cleaned subsystem, evaluated with zero-set entries pinned to 0.
void strictly_inductive(const Context& ctx, const RatVec& u, Verdict& out) {
  const RatVec part = restrict_to(u, ctx.cleaned.kept);
  const RatVec fu = eval_pps(ctx.cleaned.clean, part);
  for (std::size_t k = 0; k < part.size(); ++k) {
    if (!(fu[k] < part[k])) {
      out.violations.push_back({"f(u) < u", ctx.ppda.tri_name(ctx.cleaned.kept[k]), fu[k], part[k]});
    }
  }
}

}  // namespace

std::string_view kind_name(const Certificate& cert) {
  static constexpr std::string_view names[] = {"upper", "lower", "past", "cpast"};
  return names[cert.index()];
}

Verdict verify_upper(const Ppda& ppda, const UpperCert& cert) {
  require_size(cert.u, ppda.tri_count(), "u");
  const Context ctx(ppda);
  Verdict out;
  non_negative(ctx, cert.u, "u", out);
  if (cert.strict) {
    zero_on_zero_set(ctx, cert.u, "u", out);
    strictly_inductive(ctx, cert.u, out);
  } else {
    inductive(ctx, cert.u, out);
  }
  return out;
}

Verdict verify_lower(const Ppda& ppda, const LowerCert& cert) {
  require_size(cert.l, ppda.tri_count(), "l");
  require_size(cert.u, ppda.tri_count(), "u");
  const Context ctx(ppda);
  Verdict out;
  non_negative(ctx, cert.l, "l", out);
  non_negative(ctx, cert.u, "u", out);
  zero_on_zero_set(ctx, cert.l, "l", out);
  zero_on_zero_set(ctx, cert.u, "u", out);
  const RatVec fl = eval_pps(ctx.system, cert.l);
  for (std::size_t i = 0; i < cert.l.size(); ++i) {
    if (!(cert.l[i] <= fl[i])) out.violations.push_back({"l <= f(l)", ppda.tri_name(i), cert.l[i], fl[i]});
  }
  for (std::size_t i = 0; i < cert.l.size(); ++i) {
    if (!(cert.l[i] <= cert.u[i])) out.violations.push_back({"l <= u", ppda.tri_name(i), cert.l[i], cert.u[i]});
  }
  strictly_inductive(ctx, cert.u, out);
  return out;
}

Verdict verify_past(const Ppda& ppda, const PastCert& cert) {
  require_size(cert.u, ppda.tri_count(), "u");
  require_size(cert.r, ppda.pair_count(), "r");
  const Context ctx(ppda);
  Verdict out;
  non_negative(ctx, cert.u, "u", out);
  for (std::size_t pz = 0; pz < cert.r.size(); ++pz) {
    if (cert.r[pz] < 1) out.violations.push_back({"r >= 1", ppda.pair_name(pz), cert.r[pz], Rational(1)});
  }
  inductive(ctx, cert.u, out);
  const LinearSystem runtime = runtime_system(ppda, cert.u);
  const RatVec mr = runtime.matrix.multiply(cert.r);
  for (std::size_t pz = 0; pz < cert.r.size(); ++pz) {
    const Rational lhs = mr[pz] + runtime.constant[pz];
    if (!(lhs <= cert.r[pz])) out.violations.push_back({"M(u) r + 1 <= r", ppda.pair_name(pz), lhs, cert.r[pz]});
  }
  return out;
}

Verdict verify_cpast(const Ppda& ppda, const CpastCert& cert) {
  require_size(cert.u, ppda.tri_count(), "u");
  require_size(cert.v, ppda.tri_count(), "v");
  const Context ctx(ppda);
  Verdict out;
  non_negative(ctx, cert.u, "u", out);
  inductive(ctx, cert.u, out);
  zero_on_zero_set(ctx, cert.v, "v", out);
  const RatVec v = restrict_to(cert.v, ctx.cleaned.kept);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!(v[k] > 0)) out.violations.push_back({"v > 0", ppda.tri_name(ctx.cleaned.kept[k]), v[k], Rational(0)});
  }
  const RatVec jv = jacobian_at(ctx.cleaned.clean, restrict_to(cert.u, ctx.cleaned.kept)).multiply(v);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!(jv[k] < v[k])) out.violations.push_back({"f'(u) v < v", ppda.tri_name(ctx.cleaned.kept[k]), jv[k], v[k]});
  }
  return out;
}

Verdict verify(const Ppda& ppda, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) -> Verdict {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, UpperCert>) return verify_upper(ppda, c);
        else if constexpr (std::is_same_v<T, LowerCert>) return verify_lower(ppda, c);
        else if constexpr (std::is_same_v<T, PastCert>) return verify_past(ppda, c);
        else return verify_cpast(ppda, c);
      },
      cert);
}

}  // namespace ppdacert
