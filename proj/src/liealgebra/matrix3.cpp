#include "sodelie/liealgebra/matrix3.hpp"

#include "sodelie/polyfield/linalg.hpp"

namespace sodelie::lie {

bool Matrix3::is_zero() const {
  for (const auto& row : entries) {
    for (const auto& e : row) {
      if (e != 0) return false;
    }
  }
  return true;
}

Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = a(r, c) - b(r, c);
  }
  return out;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Rational sum = 0;
      for (std::size_t k = 0; k < 3; ++k) sum += a(r, k) * b(k, c);
      out(r, c) = sum;
    }
  }
  return out;
}

Matrix3 operator*(const Rational& s, const Matrix3& a) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = s * a(r, c);
  }
  return out;
}

std::string Matrix3::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < 3; ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < 3; ++c) out += (c ? " " : "") + entries[r][c].get_str();
  }
  return out + "]";
}

Matrix3 matrix_bracket(const Matrix3& a, const Matrix3& b) { return a * b - b * a; }

namespace {

Matrix3 from_rows(std::array<std::array<int, 3>, 3> rows, const Rational& scale = 1) {
  Matrix3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = scale * rows[r][c];
  }
  return m;
}

}  // namespace

std::vector<Matrix3> sl3_matrices() {
  return {
      from_rows({{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}}, -1),
      from_rows({{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}, -1),
      from_rows({{{0, 0, 0}, {1, 0, 0}, {0, -1, 0}}}),
      from_rows({{{1, 0, 0}, {0, -2, 0}, {0, 0, 1}}}, ratio(1, 3)),
      from_rows({{{0, 1, 0}, {0, 0, -1}, {0, 0, 0}}}),
      from_rows({{{0, 0, 2}, {0, 0, 0}, {0, 0, 0}}}),
      from_rows({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}}, -1),
      from_rows({{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}}),
  };
}

namespace {

RationalMatrix as_columns(std::span<const Matrix3> basis) {
  RationalMatrix a(9, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t k = 0; k < 9; ++k) a(k, j) = basis[j](k / 3, k % 3);
  }
  return a;
}

}  // namespace

std::optional<std::vector<Rational>> matrix_coefficients(const Matrix3& m, std::span<const Matrix3> basis) {
  std::vector<Rational> rhs(9);
  for (std::size_t k = 0; k < 9; ++k) rhs[k] = m(k / 3, k % 3);
  return solve_exact(as_columns(basis), rhs);
}

std::size_t matrix_rank(std::span<const Matrix3> basis) { return exact_rank(as_columns(basis)); }

}  // namespace sodelie::lie
