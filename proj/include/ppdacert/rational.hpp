#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ppdacert {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rational = mpq_class;

/// Dense exact vector aligned with some declared index set.
using RatVec = std::vector<Rational>;

/// Parses `num/den` or a plain integer. Only non-negative values are accepted.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always `num/den`, e.g. "1/1" for one.
std::string to_string(const Rational& value);

/// Display-only rendering with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 12);

/// 2^exponent for any integer exponent.
Rational pow2(long exponent);

/// Largest k/2^bits that is <= value.
Rational floor_dyadic(const Rational& value, unsigned bits);
/// Smallest k/2^bits that is >= value.
Rational ceil_dyadic(const Rational& value, unsigned bits);

/// Bits needed for numerator plus denominator.
std::size_t bit_size(const Rational& value);

RatVec zeros(std::size_t n);
RatVec constant_vector(std::size_t n, const Rational& value);

/// Componentwise u <= v.
bool leq(const RatVec& u, const RatVec& v);
/// Componentwise u < v in every coordinate.
bool strictly_less(const RatVec& u, const RatVec& v);

RatVec componentwise_max(const RatVec& u, const RatVec& v);
RatVec componentwise_min(const RatVec& u, const RatVec& v);

/// max_i |u_i - v_i|
Rational max_norm_distance(const RatVec& u, const RatVec& v);

/// Element of the extended non-negative rationals: a finite value >= 0 or
/// infinity. Follows the semiring conventions a + inf = inf, 0 * inf = 0 and
/// a * inf = inf for a > 0.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value);  // NOLINT(google-explicit-constructor)

  static ExtRational infinity();

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  std::string to_string() const;

 private:
  Rational finite_{0};
  bool infinite_ = false;
};

}  // namespace ppdacert
