#include "ppdacert/oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace ppdacert {

namespace {

// Stack stored bottom first, so the top is back().
using Config = std::pair<std::uint32_t, std::vector<std::uint32_t>>;

}  // namespace

Exploration truncated_explore(const Ppda& ppda, StateId state, const std::vector<SymbolId>& stack,
                              std::size_t step_cap, std::size_t stack_cap, std::size_t node_limit) {
  Exploration out;
  out.prob_lb = zeros(ppda.num_states());
  out.moment_lb = zeros(ppda.num_states());
  if (stack.empty() || stack.size() > stack_cap) return out;

  std::map<Config, Rational> layer;
  Config initial{static_cast<std::uint32_t>(index(state)), {}};
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) initial.second.push_back(static_cast<std::uint32_t>(index(*it)));
  layer[initial] = 1;

  for (std::size_t step = 1; step <= step_cap && !layer.empty(); ++step) {
    std::map<Config, Rational> next;
    for (const auto& [config, mass] : layer) {
      const auto& [p, st] = config;
      const std::size_t pz = ppda.pair_id({StateId(p), SymbolId(st.back())});
      for (const auto r : ppda.rules_of(pz)) {
        const Transition& t = ppda.transitions()[r];
        const Rational m = mass * t.weight;
        Config succ{static_cast<std::uint32_t>(index(t.to)), st};
        succ.second.pop_back();
        for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) succ.second.push_back(static_cast<std::uint32_t>(index(*it)));
        if (succ.second.empty()) {
          out.prob_lb[succ.first] += m;
          out.moment_lb[succ.first] += m * static_cast<unsigned long>(step);
        } else if (succ.second.size() <= stack_cap) {
          next[std::move(succ)] += m;
        }
      }
    }
    if (next.size() > node_limit) {
      throw std::runtime_error("truncated exploration exceeded the node limit of " + std::to_string(node_limit));
    }
    out.peak_layer = std::max(out.peak_layer, next.size());
    layer = std::move(next);
  }
  return out;
}

Exploration truncated_explore(const Ppda& ppda, PairIndex start, std::size_t step_cap, std::size_t stack_cap,
                              std::size_t node_limit) {
  return truncated_explore(ppda, start.p, {start.z}, step_cap, stack_cap, node_limit);
}

double SimStats::probability(std::size_t state) const {
  return runs == 0 ? 0.0 : static_cast<double>(hits.at(state)) / static_cast<double>(runs);
}

double SimStats::probability_stderr(std::size_t state) const {
  if (runs == 0) return 0.0;
  const double p = probability(state);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(runs));
}

double SimStats::mean_length() const {
  return runs == 0 ? 0.0 : static_cast<double>(sum_length) / static_cast<double>(runs);
}

double SimStats::mean_length_stderr() const {
  if (runs < 2) return 0.0;
  const double n = static_cast<double>(runs);
  const double mean = mean_length();
  const double var = (static_cast<double>(sum_squared_length) - n * mean * mean) / (n - 1.0);
  return std::sqrt(std::max(var, 0.0) / n);
}

SimStats simulate(const Ppda& ppda, PairIndex start, std::uint64_t runs, std::uint64_t step_cap, std::uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");

  // Integer thresholds per pair: rule k fires for draws below thresholds[k].
  constexpr unsigned kBits = 53;
  std::vector<std::vector<std::uint64_t>> thresholds(ppda.pair_count());
  for (std::size_t pz = 0; pz < ppda.pair_count(); ++pz) {
    Rational cumulative = 0;
    for (const auto r : ppda.rules_of(pz)) {
      cumulative += ppda.transitions()[r].weight;
      const mpz_class scaled = mpz_class(cumulative.get_num() << kBits);
      mpz_class ceil_value;
      mpz_cdiv_q(ceil_value.get_mpz_t(), scaled.get_mpz_t(), cumulative.get_den_mpz_t());
      thresholds[pz].push_back(ceil_value.get_ui());
    }
  }

  SimStats stats;
  stats.seed = seed;
  stats.start = start;
  stats.runs = runs;
  stats.hits.assign(ppda.num_states(), 0);
  std::mt19937_64 gen(seed);
  std::vector<std::uint32_t> stack;

  for (std::uint64_t run = 0; run < runs; ++run) {
    std::size_t state = index(start.p);
    stack.assign(1, static_cast<std::uint32_t>(index(start.z)));
    std::uint64_t length = 0;
    bool finished = false;
    while (length < step_cap) {
      const std::size_t pz = ppda.pair_id({StateId(static_cast<std::uint32_t>(state)), SymbolId(stack.back())});
      const std::uint64_t draw = gen() >> (64 - kBits);
      const auto& th = thresholds[pz];
      std::size_t k = 0;
      while (k < th.size() && draw >= th[k]) ++k;
      ++length;
      if (k == th.size()) {
        ++stats.deadlocked;
        finished = true;
        break;
      }
      const Transition& t = ppda.transitions()[ppda.rules_of(pz)[k]];
      state = index(t.to);
      stack.pop_back();
      for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) stack.push_back(static_cast<std::uint32_t>(index(*it)));
      if (stack.empty()) {
        ++stats.hits[state];
        finished = true;
        break;
      }
    }
    if (!finished) ++stats.capped;
    stats.sum_length += length;
    stats.sum_squared_length += length * length;
  }
  return stats;
}

double spectral_radius_est(const RatMat& m, std::size_t max_iterations) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectral radius needs a square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 0) return 0.0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v.get_d();
  }
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double estimate = 0.0;
  for (std::size_t k = 0; k < max_iterations; ++k) {
    Eigen::VectorXd y = a * x;
    const double norm = y.cwiseAbs().maxCoeff();
    x = y / norm;
    if (k > 0 && std::abs(norm - estimate) <= 1e-12 * norm) return norm - 1.0;
    estimate = norm;
  }
  throw std::runtime_error("power iteration did not converge");
}

}  // namespace ppdacert
