#pragma once

#include <vector>

#include "lieavg/rational.hpp"

namespace lieavg {

// Dense matrix over the exact rationals; just enough linear algebra for the
// graded solves, the spectral checks, and the subalgebra intersections.
class MatQ {
 public:
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static MatQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  Rational trace() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

MatQ operator+(const MatQ& a, const MatQ& b);
MatQ operator-(const MatQ& a, const MatQ& b);
MatQ operator*(const MatQ& a, const MatQ& b);
MatQ scale(const Rational& c, const MatQ& a);

// Exact rank by fraction-free Gaussian elimination.
int rank(MatQ a);

// Solves A x = b exactly; throws std::domain_error when A is singular.
std::vector<Rational> solve_linear(MatQ a, std::vector<Rational> b);

// Nonsingularity certificate: full rank modulo a 62-bit prime proves
// nonsingularity over Q; on a zero residue the exact rank decides.
bool is_nonsingular(const MatQ& a);

// dim ker A, exact.
int kernel_dimension(const MatQ& a);

}  // namespace lieavg
