#include "ppdacert/pps.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppdacert {

std::string describe(const Violation& v) {
  return v.constraint + " violated at " + v.index + ": lhs " + to_string(v.lhs) + ", rhs " + to_string(v.rhs);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [var, exp] : powers) d += exp;
  return d;
}

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows) {}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Rational RatMat::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  const auto it = entries_[row].find(col);
  return it == entries_[row].end() ? Rational(0) : it->second;
}

void RatMat::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (value == 0) return;
  auto& slot = entries_[row][col];
  slot += value;
  if (slot == 0) entries_[row].erase(col);
}

void RatMat::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (value == 0) {
    entries_[row].erase(col);
  } else {
    entries_[row][col] = value;
  }
}

RatVec RatMat::multiply(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  RatVec y = zeros(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, a] : entries_[r]) y[r] += a * x[c];
  }
  return y;
}

RatMat RatMat::submatrix(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> position(cols_, keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = i;
  RatMat out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const auto& [c, a] : entries_[keep[i]]) {
      if (position[c] < keep.size()) out.set(i, position[c], a);
    }
  }
  return out;
}

namespace {

Polynomial canonical(Polynomial poly, std::size_t num_vars) {
  Polynomial out;
  for (auto& m : poly) {
    if (m.coeff < 0) throw std::invalid_argument("negative coefficient in positive polynomial system");
    std::sort(m.powers.begin(), m.powers.end());
    std::vector<std::pair<std::size_t, unsigned>> merged;
    for (const auto& [var, exp] : m.powers) {
      if (var >= num_vars) throw std::invalid_argument("monomial uses an undeclared variable");
      if (exp == 0) continue;
      if (!merged.empty() && merged.back().first == var) {
        merged.back().second += exp;
      } else {
        merged.emplace_back(var, exp);
      }
    }
    m.powers = std::move(merged);
    if (m.coeff == 0) continue;
    auto same = std::find_if(out.begin(), out.end(), [&](const Monomial& o) { return o.powers == m.powers; });
    if (same != out.end()) {
      same->coeff += m.coeff;
    } else {
      out.push_back(std::move(m));
    }
  }
  return out;
}

Rational power(const Rational& base, unsigned exp) {
  Rational r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

Rational eval_monomial(const Monomial& m, const RatVec& point) {
  Rational v = m.coeff;
  for (const auto& [var, exp] : m.powers) {
    if (point[var] == 0) return Rational(0);
    v *= power(point[var], exp);
  }
  return v;
}

void check_point(const Pps& pps, const RatVec& point) {
  if (point.size() != pps.size()) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " components, system has " +
                                std::to_string(pps.size()) + " variables");
  }
}

}  // namespace

Pps::Pps(std::vector<std::string> names, std::vector<Polynomial> polynomials)
    : names_(std::move(names)), polynomials_(std::move(polynomials)) {
  if (names_.size() != polynomials_.size()) {
    throw std::invalid_argument("one polynomial per variable required");
  }
  for (auto& p : polynomials_) p = canonical(std::move(p), names_.size());
}

unsigned Pps::degree() const {
  unsigned d = 0;
  for (const auto& p : polynomials_) {
    for (const auto& m : p) d = std::max(d, m.degree());
  }
  return d;
}

RatVec eval_pps(const Pps& pps, const RatVec& point) {
  check_point(pps, point);
  RatVec out = zeros(pps.size());
  for (std::size_t i = 0; i < pps.size(); ++i) {
    for (const auto& m : pps.polynomial(i)) out[i] += eval_monomial(m, point);
  }
  return out;
}

RatMat jacobian_at(const Pps& pps, const RatVec& point) {
  check_point(pps, point);
  RatMat jac(pps.size(), pps.size());
  for (std::size_t i = 0; i < pps.size(); ++i) {
    for (const auto& m : pps.polynomial(i)) {
      for (std::size_t k = 0; k < m.powers.size(); ++k) {
        const auto [var, exp] = m.powers[k];
        Rational d = m.coeff * exp;
        d *= power(point[var], exp - 1);
        for (std::size_t j = 0; j < m.powers.size() && d != 0; ++j) {
          if (j != k) d *= power(point[m.powers[j].first], m.powers[j].second);
        }
        jac.add(i, var, d);
      }
    }
  }
  return jac;
}

CleanupResult cleanup(const Pps& pps) {
  const std::size_t n = pps.size();
  std::vector<bool> marked(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (marked[i]) continue;
      for (const auto& m : pps.polynomial(i)) {
        const bool ready =
            std::all_of(m.powers.begin(), m.powers.end(), [&](const auto& vp) { return marked[vp.first]; });
        if (ready) {
          marked[i] = true;
          changed = true;
          break;
        }
      }
    }
  }

  CleanupResult result;
  std::map<std::size_t, Rational> zero_values;
  for (std::size_t i = 0; i < n; ++i) {
    if (marked[i]) {
      result.kept.push_back(i);
    } else {
      result.zero_set.push_back(i);
      zero_values.emplace(i, Rational(0));
    }
  }
  result.clean = substitute(pps, zero_values);
  return result;
}

Pps substitute(const Pps& pps, const std::map<std::size_t, Rational>& values) {
  std::vector<std::size_t> position(pps.size(), pps.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pps.size(); ++i) {
    if (!values.contains(i)) {
      position[i] = names.size();
      names.push_back(pps.name(i));
    }
  }
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < pps.size(); ++i) {
    if (values.contains(i)) continue;
    Polynomial poly;
    for (const auto& m : pps.polynomial(i)) {
      Monomial out{m.coeff, {}};
      for (const auto& [var, exp] : m.powers) {
        const auto it = values.find(var);
        if (it == values.end()) {
          out.powers.emplace_back(position[var], exp);
        } else {
          out.coeff *= power(it->second, exp);
        }
      }
      if (out.coeff != 0) poly.push_back(std::move(out));
    }
    polys.push_back(std::move(poly));
  }
  return Pps(std::move(names), std::move(polys));
}

RatVec expand(const RatVec& partial, const std::vector<std::size_t>& kept, std::size_t full_size) {
  if (partial.size() != kept.size()) throw std::invalid_argument("partial vector does not match kept set");
  RatVec full = zeros(full_size);
  for (std::size_t i = 0; i < kept.size(); ++i) full.at(kept[i]) = partial[i];
  return full;
}

RatVec restrict_to(const RatVec& full, const std::vector<std::size_t>& kept) {
  RatVec out;
  out.reserve(kept.size());
  for (const auto i : kept) out.push_back(full.at(i));
  return out;
}

Verdict check_inductive(const Pps& pps, const RatVec& u, bool strict) {
  const RatVec fu = eval_pps(pps, u);
  Verdict verdict;
  for (std::size_t i = 0; i < pps.size(); ++i) {
    if (u[i] < 0) {
      verdict.violations.push_back({"u >= 0", pps.name(i), u[i], Rational(0)});
      break;
    }
    const bool ok = strict ? fu[i] < u[i] : fu[i] <= u[i];
    if (!ok) {
      verdict.violations.push_back({strict ? "f(u) < u" : "f(u) <= u", pps.name(i), fu[i], u[i]});
      break;
    }
  }
  return verdict;
}

Pps linear_pps(const RatMat& a, const RatVec& b, std::vector<std::string> names) {
  if (a.rows() != b.size() || a.cols() != b.size() || names.size() != b.size()) {
    throw std::invalid_argument("linear system dimension mismatch");
  }
  std::vector<Polynomial> polys(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (const auto& [j, coeff] : a.row(i)) polys[i].push_back({coeff, {{j, 1U}}});
    if (b[i] != 0) polys[i].push_back({b[i], {}});
  }
  return Pps(std::move(names), std::move(polys));
}

}  // namespace ppdacert
