#ifndef SODELIE_LIEALGEBRA_MATRIX3_HPP
#define SODELIE_LIEALGEBRA_MATRIX3_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sodelie/polyfield/rational.hpp"

namespace sodelie::lie {

/// 3x3 matrix of exact rationals.
struct Matrix3 {
  std::array<std::array<Rational, 3>, 3> entries{};

  Rational& operator()(std::size_t r, std::size_t c) { return entries[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries[r][c]; }

  Rational trace() const { return entries[0][0] + entries[1][1] + entries[2][2]; }
  bool is_zero() const;

  friend Matrix3 operator+(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator-(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(const Rational& s, const Matrix3& a);
  bool operator==(const Matrix3& other) const { return entries == other.entries; }

  std::string to_string() const;
};

/// AB - BA.
Matrix3 matrix_bracket(const Matrix3& a, const Matrix3& b);

/// M1..M8, the traceless matrices with rho(M_a) = X_a.
std::vector<Matrix3> sl3_matrices();

/// Coordinates of `m` in `basis` (as vectors in R^9), or nullopt.
std::optional<std::vector<Rational>> matrix_coefficients(const Matrix3& m, std::span<const Matrix3> basis);

/// Rank of `basis` viewed as vectors in R^9.
std::size_t matrix_rank(std::span<const Matrix3> basis);

}  // namespace sodelie::lie

#endif
