#include "ppdacert/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ppdacert {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow2(long exponent) {
  mpz_class p(1);
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  if (exponent < 0) {
    return Rational(mpz_class(1), p);
  }
  return Rational(p);
}

Rational floor_dyadic(const Rational& value, unsigned bits) {
  mpz_class scaled = value.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  Rational r(scaled, mpz_class(1));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

Rational ceil_dyadic(const Rational& value, unsigned bits) {
  mpz_class scaled = value.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  Rational r(scaled, mpz_class(1));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

std::size_t bit_size(const Rational& value) {
  return mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

RatVec zeros(std::size_t n) { return RatVec(n, Rational(0)); }

RatVec constant_vector(std::size_t n, const Rational& value) { return RatVec(n, value); }

bool leq(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

bool strictly_less(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] < v[i])) return false;
  }
  return true;
}

RatVec componentwise_max(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  RatVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] < v[i] ? v[i] : u[i];
  return out;
}

RatVec componentwise_min(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  RatVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = v[i] < u[i] ? v[i] : u[i];
  return out;
}

Rational max_norm_distance(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  Rational best(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rational d = u[i] - v[i];
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

ExtRational::ExtRational(Rational value) : finite_(std::move(value)) {
  if (finite_ < 0) throw std::invalid_argument("extended rationals are non-negative");
}

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.infinite_ = true;
  return r;
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("value() of infinity");
  return finite_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return ExtRational::infinity();
  return ExtRational(Rational(a.finite_ + b.finite_));
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  const bool a_zero = !a.infinite_ && a.finite_ == 0;
  const bool b_zero = !b.infinite_ && b.finite_ == 0;
  if (a_zero || b_zero) return ExtRational(Rational(0));
  if (a.infinite_ || b.infinite_) return ExtRational::infinity();
  return ExtRational(Rational(a.finite_ * b.finite_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ != b.infinite_) return false;
  return a.infinite_ || a.finite_ == b.finite_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  const int c = cmp(a.finite_, b.finite_);
  return c <=> 0;
}

std::string ExtRational::to_string() const {
  return infinite_ ? std::string("inf") : ppdacert::to_string(finite_);
}

}  // namespace ppdacert
