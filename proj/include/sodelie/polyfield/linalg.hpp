#ifndef SODELIE_POLYFIELD_LINALG_HPP
#define SODELIE_POLYFIELD_LINALG_HPP

#include <optional>
#include <vector>

#include "sodelie/polyfield/rational.hpp"

namespace sodelie {

/// Row-major dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Exact rank. Each row is scaled to integers, then reduced with Bareiss'
/// fraction-free elimination so every intermediate stays an integer.
std::size_t exact_rank(const RationalMatrix& m);

/// One solution of A c = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace sodelie

#endif
