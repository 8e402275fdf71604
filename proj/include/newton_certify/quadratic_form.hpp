#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "newton_certify/polynomial.hpp"
#include "newton_certify/rational.hpp"

namespace newton_certify {

/// Symmetric n x n matrix over Q(i); B(x) = sum_ij B_ij x_i x_j.
class QuadraticForm {
 public:
  explicit QuadraticForm(int n);
  /// Row-major entries; throws Error unless the matrix is symmetric.
  QuadraticForm(int n, std::vector<GaussianRational> entries);

  int n() const noexcept { return n_; }
  const GaussianRational& operator()(int i, int j) const { return entries_[index(i, j)]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, const GaussianRational& value);
  std::span<const GaussianRational> entries() const noexcept { return entries_; }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<GaussianRational> entries_;
};

/// B with B_ii = coeff(x_i^2), B_ij = coeff(x_i x_j)/2, so that B(x) is the
/// degree-2 part of f. Throws Error if f has a constant or linear term.
QuadraticForm quadratic_part(const SparsePolynomial& f);

/// Second partials at the origin; equals 2 * quadratic_part(f) entrywise.
QuadraticForm hessian_at_zero(const SparsePolynomial& f);

/// Exact determinant of a row-major n x n matrix. Integer matrices go through
/// Bareiss elimination over Z; everything else through Gaussian elimination
/// over Q(i).
GaussianRational determinant(int n, std::span<const GaussianRational> row_major);
GaussianRational determinant(const QuadraticForm& b);

/// The polynomial sum_ij B_ij x_i x_j.
SparsePolynomial to_polynomial(const QuadraticForm& b);

}  // namespace newton_certify
