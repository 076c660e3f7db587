#include "ppdacert/systems.hpp"

#include "ppdacert/linear.hpp"

#include <deque>
#include <stdexcept>

namespace ppdacert {

namespace {

std::vector<std::string> tri_names(const Ppda& ppda) {
  std::vector<std::string> names;
  names.reserve(ppda.tri_count());
  for (std::size_t i = 0; i < ppda.tri_count(); ++i) names.push_back(ppda.tri_name(i));
  return names;
}

StateId state(std::size_t i) { return StateId(static_cast<std::uint32_t>(i)); }

void check_tri_vector(const Ppda& ppda, const RatVec& v) {
  if (v.size() != ppda.tri_count()) {
    throw std::invalid_argument("vector has " + std::to_string(v.size()) + " entries, automaton has " +
                                std::to_string(ppda.tri_count()) + " triples");
  }
}

}  // namespace

Pps fundamental_system(const Ppda& ppda) {
  const std::size_t nq = ppda.num_states();
  std::vector<Polynomial> polys(ppda.tri_count());
  for (const auto& t : ppda.transitions()) {
    for (std::size_t q = 0; q < nq; ++q) {
      Polynomial& poly = polys[ppda.tri_id({t.from, t.top, state(q)})];
      switch (t.push.size()) {
        case 0:
          if (index(t.to) == q) poly.push_back({t.weight, {}});
          break;
        case 1:
          poly.push_back({t.weight, {{ppda.tri_id({t.to, t.push[0], state(q)}), 1U}}});
          break;
        default:
          for (std::size_t mid = 0; mid < nq; ++mid) {
            const std::size_t first = ppda.tri_id({t.to, t.push[0], state(mid)});
            const std::size_t second = ppda.tri_id({state(mid), t.push[1], state(q)});
            poly.push_back({t.weight, {{first, 1U}, {second, 1U}}});
          }
      }
    }
  }
  return Pps(tri_names(ppda), std::move(polys));
}

LinearSystem moments_system(const Ppda& ppda, const RatVec& probs) {
  check_tri_vector(ppda, probs);
  return {jacobian_at(fundamental_system(ppda), probs), probs};
}

LinearSystem moments_system_direct(const Ppda& ppda, const RatVec& probs) {
  check_tri_vector(ppda, probs);
  const std::size_t nq = ppda.num_states();
  RatMat a(ppda.tri_count(), ppda.tri_count());
  for (const auto& t : ppda.transitions()) {
    for (std::size_t q = 0; q < nq; ++q) {
      const std::size_t row = ppda.tri_id({t.from, t.top, state(q)});
      if (t.push.size() == 1) {
        a.add(row, ppda.tri_id({t.to, t.push[0], state(q)}), t.weight);
      } else if (t.push.size() == 2) {
        for (std::size_t mid = 0; mid < nq; ++mid) {
          const std::size_t ry_t = ppda.tri_id({t.to, t.push[0], state(mid)});
          const std::size_t tx_q = ppda.tri_id({state(mid), t.push[1], state(q)});
          a.add(row, ry_t, t.weight * probs[tx_q]);
          a.add(row, tx_q, t.weight * probs[ry_t]);
        }
      }
    }
  }
  return {std::move(a), probs};
}

LinearSystem runtime_system(const Ppda& ppda, const RatVec& u) {
  check_tri_vector(ppda, u);
  const std::size_t nq = ppda.num_states();
  RatMat m(ppda.pair_count(), ppda.pair_count());
  for (const auto& t : ppda.transitions()) {
    const std::size_t row = ppda.pair_id({t.from, t.top});
    if (t.push.empty()) continue;
    m.add(row, ppda.pair_id({t.to, t.push[0]}), t.weight);
    if (t.push.size() == 2) {
      for (std::size_t mid = 0; mid < nq; ++mid) {
        const Rational& ret = u[ppda.tri_id({t.to, t.push[0], state(mid)})];
        m.add(row, ppda.pair_id({state(mid), t.push[1]}), t.weight * ret);
      }
    }
  }
  // A run that deadlocks never terminates; a unit self-loop makes that row
  // unsatisfiable, so its least runtime is infinite.
  for (std::size_t pz = 0; pz < ppda.pair_count(); ++pz) {
    if (ppda.deficit(pz) > 0) m.add(pz, pz, Rational(1));
  }
  return {std::move(m), constant_vector(ppda.pair_count(), Rational(1))};
}

PbpaDecision pbpa_past_decide(const Ppda& ppda) {
  if (ppda.num_states() != 1) {
    throw std::invalid_argument("pBPA decision needs exactly one state, automaton has " +
                                std::to_string(ppda.num_states()));
  }
  PbpaDecision out;
  for (std::size_t z = 0; z < ppda.pair_count(); ++z) {
    if (ppda.deficit(z) > 0) {
      out.reason = "symbol " + ppda.alphabet()[z] + " can deadlock, so the automaton is not AST";
      return out;
    }
  }
  // With one state, triple <pZp> and pair pZ share the index of Z.
  const std::size_t n = ppda.num_symbols();
  const RatMat jac = jacobian_at(fundamental_system(ppda), constant_vector(n, Rational(1)));
  RatMat system = RatMat::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : jac.row(r)) system.add(r, c, Rational(-v));
  }
  const auto solution = solve_exact(system, constant_vector(n, Rational(1)));
  if (!solution) {
    out.reason = "I - f'(1) is singular";
    return out;
  }
  for (std::size_t z = 0; z < n; ++z) {
    if ((*solution)[z] < 1) {
      out.reason = "the unique solution has r[" + ppda.alphabet()[z] + "] = " + to_string((*solution)[z]) + " < 1";
      return out;
    }
  }
  out.past = true;
  out.runtimes = *solution;
  return out;
}

std::vector<std::size_t> reachable_pairs(const Ppda& ppda, PairIndex start) {
  const CleanupResult cleaned = cleanup(fundamental_system(ppda));
  std::vector<bool> positive(ppda.tri_count(), false);
  for (const auto k : cleaned.kept) positive[k] = true;

  std::vector<bool> seen(ppda.pair_count(), false);
  std::deque<std::size_t> work{ppda.pair_id(start)};
  seen[work.front()] = true;
  const auto visit = [&](std::size_t pz) {
    if (!seen[pz]) {
      seen[pz] = true;
      work.push_back(pz);
    }
  };
  while (!work.empty()) {
    const std::size_t pz = work.front();
    work.pop_front();
    for (const auto r : ppda.rules_of(pz)) {
      const Transition& t = ppda.transitions()[r];
      if (t.push.empty()) continue;
      visit(ppda.pair_id({t.to, t.push[0]}));
      if (t.push.size() == 2) {
        for (std::size_t mid = 0; mid < ppda.num_states(); ++mid) {
          if (positive[ppda.tri_id({t.to, t.push[0], state(mid)})]) visit(ppda.pair_id({state(mid), t.push[1]}));
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t pz = 0; pz < seen.size(); ++pz) {
    if (seen[pz]) out.push_back(pz);
  }
  return out;
}

}  // namespace ppdacert
