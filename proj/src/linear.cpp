#include "ppdacert/linear.hpp"

#include <stdexcept>
#include <utility>

namespace ppdacert {

std::optional<RatVec> solve_exact(const RatMat& system, const RatVec& rhs) {
  const std::size_t n = system.rows();
  if (system.cols() != n || rhs.size() != n) throw std::invalid_argument("linear system dimension mismatch");

  std::vector<RatVec> m(n, zeros(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : system.row(r)) m[r][c] = v;
    m[r][n] = rhs[r];
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) {
        if (m[col][c] != 0) m[r][c] -= factor * m[col][c];
      }
    }
  }

  RatVec x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n] / m[r][r];
  return x;
}

std::optional<RatVec> solve_linear_least(const RatMat& a, const RatVec& b) {
  const std::size_t n = b.size();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("linear system dimension mismatch");
  for (std::size_t r = 0; r < n; ++r) {
    if (b[r] < 0) throw std::invalid_argument("negative constant term");
    for (const auto& [c, v] : a.row(r)) {
      if (v < 0) throw std::invalid_argument("negative matrix entry");
    }
  }

  const CleanupResult cleaned = cleanup(linear_pps(a, b, std::vector<std::string>(n)));
  const std::vector<std::size_t>& kept = cleaned.kept;

  RatMat system = RatMat::identity(kept.size());
  const RatMat sub = a.submatrix(kept);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (const auto& [c, v] : sub.row(r)) system.add(r, c, Rational(-v));
  }
  const auto solution = solve_exact(system, restrict_to(b, kept));
  if (!solution) return std::nullopt;
  for (const auto& v : *solution) {
    if (v < 0) return std::nullopt;
  }

  RatVec x = expand(*solution, kept, n);
  RatVec ax = a.multiply(x);
  for (std::size_t i = 0; i < n; ++i) {
    if (ax[i] + b[i] != x[i]) throw std::logic_error("linear solution failed the exact re-check");
  }
  return x;
}

}  // namespace ppdacert
