#include "sodelie/polyfield/linalg.hpp"

#include <stdexcept>

namespace sodelie {

namespace {

// Rows scaled by the lcm of their denominators; rank is unchanged.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
  }
  return rows;
}

}  // namespace

std::size_t exact_rank(const RationalMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer previous = 1;
  std::size_t rank = 0;
  Integer t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        // a[i][j] = (p * a[i][j] - a[i][col] * a[rank][j]) / previous, exact.
        t = p * a[i][j];
        t -= a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: right-hand side size mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a(r, c);
    m[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j <= cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j <= cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, 0);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = m[r][cols];
  return x;
}

}  // namespace sodelie
