// Display-only decimal rendering. Kept apart from the exact arithmetic so the
// verification path stays free of floating point.
#include "ppdacert/rational.hpp"

#include <algorithm>

namespace ppdacert {

std::string to_decimal(const Rational& value, int digits) {
  // mpf keeps enough precision for 12 digits of huge dyadic values, where a
  // plain double conversion could underflow.
  mpf_class f(value, 256);
  char* raw = nullptr;
  const int len = gmp_asprintf(&raw, "%.*Fg", digits, f.get_mpf_t());
  std::string out(raw, static_cast<std::size_t>(std::max(len, 0)));
  void (*free_fn)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(raw, static_cast<size_t>(len) + 1);
  return out;
}

}  // namespace ppdacert
