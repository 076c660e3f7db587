#pragma once

#include "ppdacert/rational.hpp"
#include "ppdacert/verdict.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ppdacert {

/// coeff * prod x_var^exp. `powers` is sorted by variable, every exponent >= 1;
/// empty powers make a constant term.
struct Monomial {
  Rational coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;

  unsigned degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using Polynomial = std::vector<Monomial>;

/// Sparse non-negative matrix; absent entries are zero.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t row, std::size_t col) const;
  void add(std::size_t row, std::size_t col, const Rational& value);
  void set(std::size_t row, std::size_t col, const Rational& value);

  /// Non-zero entries of one row, keyed by column.
  const std::map<std::size_t, Rational>& row(std::size_t r) const { return entries_[r]; }

  RatVec multiply(const RatVec& x) const;
  /// Rows and columns restricted to `keep` (in that order).
  RatMat submatrix(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const RatMat&, const RatMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Rational>> entries_;
};

/// Positive polynomial system x = f(x) over an ordered set of named variables.
/// Like monomials are merged; zero-coefficient monomials are dropped.
class Pps {
 public:
  Pps() = default;
  Pps(std::vector<std::string> names, std::vector<Polynomial> polynomials);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const Polynomial& polynomial(std::size_t i) const { return polynomials_[i]; }
  const std::vector<Polynomial>& polynomials() const { return polynomials_; }

  unsigned degree() const;
  bool is_linear() const { return degree() <= 1; }

  friend bool operator==(const Pps&, const Pps&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Polynomial> polynomials_;
};

/// f(point). Throws std::invalid_argument on a size mismatch.
RatVec eval_pps(const Pps& pps, const RatVec& point);

/// Jacobi matrix of all first partial derivatives, evaluated at point.
RatMat jacobian_at(const Pps& pps, const RatVec& point);

struct CleanupResult {
  Pps clean;
  /// Original index of each variable of `clean`.
  std::vector<std::size_t> kept;
  /// Variables whose least fixed point is 0, ascending.
  std::vector<std::size_t> zero_set;
};

/// Removes the variables whose least-fixed-point value is 0. A variable is
/// kept iff some monomial of its polynomial uses only kept variables; constant
/// monomials start the marking.
CleanupResult cleanup(const Pps& pps);

/// Replaces the given variables by constants and drops them from the system.
Pps substitute(const Pps& pps, const std::map<std::size_t, Rational>& values);

/// Expands a vector over `kept` back to the full index set with zeros elsewhere.
RatVec expand(const RatVec& partial, const std::vector<std::size_t>& kept, std::size_t full_size);
/// Restricts a full vector to the indices in `kept`.
RatVec restrict_to(const RatVec& full, const std::vector<std::size_t>& kept);

/// f(u) <= u (or f(u) < u componentwise when strict). A rejection carries the
/// first violated component only.
Verdict check_inductive(const Pps& pps, const RatVec& u, bool strict);

/// Linear PPS x = Ax + b as a Pps with the given variable names.
Pps linear_pps(const RatMat& a, const RatVec& b, std::vector<std::string> names);

}  // namespace ppdacert
