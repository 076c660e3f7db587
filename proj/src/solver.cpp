#include "ppdacert/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ppdacert {

void ApproxConfig::validate() const {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (round_bits < 1) throw std::invalid_argument("round_bits must be at least 1");
}

std::size_t default_max_iterations(std::size_t fallback) {
  const char* env = std::getenv("PPDACERT_MAX_ITER");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    const unsigned long long v = std::stoull(env);
    return v == 0 ? fallback : static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

namespace {

struct FloatTerm {
  double coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;
};

// Floating-point copy of a system for Newton steps.
class FloatSystem {
 public:
  explicit FloatSystem(const Pps& pps) : terms_(pps.size()) {
    for (std::size_t i = 0; i < pps.size(); ++i) {
      for (const auto& m : pps.polynomial(i)) terms_[i].push_back({m.coeff.get_d(), m.powers});
    }
  }

  std::size_t size() const { return terms_.size(); }

  Eigen::VectorXd eval(const Eigen::VectorXd& x) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      for (const auto& t : terms_[i]) {
        double v = t.coeff;
        for (const auto& [var, exp] : t.powers) v *= std::pow(x[static_cast<Eigen::Index>(var)], exp);
        out[static_cast<Eigen::Index>(i)] += v;
      }
    }
    return out;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < size(); ++i) {
      for (const auto& t : terms_[i]) {
        for (std::size_t k = 0; k < t.powers.size(); ++k) {
          const auto [var, exp] = t.powers[k];
          double d = t.coeff * exp * std::pow(x[static_cast<Eigen::Index>(var)], static_cast<int>(exp) - 1);
          for (std::size_t j = 0; j < t.powers.size(); ++j) {
            if (j != k) d *= std::pow(x[static_cast<Eigen::Index>(t.powers[j].first)], t.powers[j].second);
          }
          jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(var)) += d;
        }
      }
    }
    return jac;
  }

 private:
  std::vector<std::vector<FloatTerm>> terms_;
};

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<double> kleene_float(const FloatSystem& sys, std::size_t max_iterations) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.size()));
  for (std::size_t k = 0; k < max_iterations; ++k) {
    Eigen::VectorXd next = sys.eval(x);
    if (!next.allFinite()) break;
    const double change = (next - x).cwiseAbs().maxCoeff();
    x = std::move(next);
    if (change == 0.0) break;
  }
  return to_std(x);
}

double residual(const FloatSystem& sys, const Eigen::VectorXd& x) {
  if (x.size() == 0) return 0.0;
  return (sys.eval(x) - x).cwiseAbs().maxCoeff();
}

}  // namespace

namespace {

RatVec kleene_impl(const Pps& pps, const ApproxConfig& cfg, const RatVec* upper) {
  RatVec l = zeros(pps.size());
  if (upper != nullptr && max_norm_distance(l, *upper) <= cfg.epsilon) return l;
  const double eps = cfg.epsilon.get_d();
  double previous_step = -1.0;
  for (std::size_t k = 0; k < cfg.max_iterations; ++k) {
    const RatVec fl = eval_pps(pps, l);
    double step = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const Rational rounded = floor_dyadic(fl[i], cfg.round_bits);
      if (rounded > l[i]) {
        step = std::max(step, Rational(rounded - l[i]).get_d());
        l[i] = rounded;
      }
    }
    if (step == 0.0) break;
    if (upper != nullptr) {
      if (max_norm_distance(l, *upper) <= cfg.epsilon) break;
      continue;
    }
    if (previous_step > 0.0) {
      const double ratio = step / previous_step;
      if (ratio < 1.0 && step * ratio / (1.0 - ratio) <= eps && step <= eps) break;
    }
    previous_step = step;
  }
  return l;
}

}  // namespace

RatVec kleene_lower(const Pps& pps, const ApproxConfig& cfg) { return kleene_impl(pps, cfg, nullptr); }

RatVec kleene_lower(const Pps& pps, const ApproxConfig& cfg, const RatVec& upper) {
  if (upper.size() != pps.size()) throw std::invalid_argument("upper bound has the wrong length");
  return kleene_impl(pps, cfg, &upper);
}

std::vector<double> newton_approx(const Pps& pps, const ApproxConfig& cfg) {
  const FloatSystem sys(pps);
  const auto n = static_cast<Eigen::Index>(pps.size());
  if (n == 0) return {};
  const std::size_t budget = std::min<std::size_t>(cfg.max_iterations, 1000);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  double res = residual(sys, x);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t k = 0; k < budget && res > 0.0; ++k) {
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(identity - sys.jacobian(x));
    if (!lu.isInvertible()) return kleene_float(sys, cfg.max_iterations);
    const Eigen::VectorXd step = lu.solve(sys.eval(x) - x);
    if (!step.allFinite()) return kleene_float(sys, cfg.max_iterations);

    bool improved = false;
    double t = 1.0;
    for (int halving = 0; halving < 40; ++halving, t /= 2.0) {
      Eigen::VectorXd candidate = (x + t * step).cwiseMax(0.0);
      const double r = residual(sys, candidate);
      if (std::isfinite(r) && r < res) {
        x = std::move(candidate);
        res = r;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if (x.cwiseAbs().maxCoeff() > 1e300) return kleene_float(sys, cfg.max_iterations);
  }
  return to_std(x);
}

RatVec rationalize(std::span<const double> point, Rounding direction, unsigned bits) {
  RatVec out;
  out.reserve(point.size());
  for (const double v : point) {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot rationalize a NaN or infinite value");
    if (v <= 0.0) {
      out.emplace_back(0);
      continue;
    }
    const Rational exact(v);
    out.push_back(direction == Rounding::down ? floor_dyadic(exact, bits) : ceil_dyadic(exact, bits));
  }
  return out;
}

std::vector<double> improvement_direction(const Pps& pps, std::span<const double> point) {
  const auto n = static_cast<Eigen::Index>(pps.size());
  std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  if (n == 0) return ones;
  const FloatSystem sys(pps);
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(point.data(), n);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd::Identity(n, n) - sys.jacobian(x));
  if (!lu.isInvertible()) return ones;
  Eigen::VectorXd d = lu.solve(Eigen::VectorXd::Ones(n));
  if (!d.allFinite() || d.minCoeff() <= 0.0) return ones;
  d /= d.maxCoeff();
  return to_std(d);
}

}  // namespace ppdacert
