#include "linalg.hpp"

#include <cassert>

namespace extprob::detail {

std::optional<Vec> solve(const Mat& a, const Vec& b, std::size_t cols) {
  assert(a.size() == b.size());
  const std::size_t rows = a.size();
  Mat m(rows, Vec(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    assert(a[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a[r][c];
    m[r][cols] = b[r];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c <= cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;

  Vec x(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][cols];
  return x;
}

std::optional<Vec> span_coefficients(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) {
    for (const auto& q : v)
      if (q != 0) return std::nullopt;
    return Vec{};
  }
  Mat a(v.size(), Vec(basis.size()));
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) a[r][c] = basis[c][r];
  return solve(a, v, basis.size());
}

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec primitive_integer(const Vec& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Vec out(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_num_mpz_t());
  }
  if (g > 1)
    for (auto& q : out) q /= g;
  return out;
}

}  // namespace extprob::detail
