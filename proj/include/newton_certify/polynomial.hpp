#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "newton_certify/rational.hpp"

namespace newton_certify {

/// Exponents k_1..k_n of the monomial x1^k1 ... xn^kn; all entries >= 0.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& k);

/// Finite sum of terms a_k x^k with exact Gaussian-rational coefficients.
/// Analytic germs are represented by finite truncations of this type.
///
/// Invariants: no stored coefficient is zero, every exponent vector has
/// length n_vars() with nonnegative entries. Terms iterate in descending
/// lexicographic exponent order, which is also the canonical print order.
class SparsePolynomial {
 public:
  using TermMap = std::map<ExponentVector, GaussianRational, std::greater<>>;

  explicit SparsePolynomial(int n_vars);

  int n_vars() const noexcept { return n_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c*x^k to the polynomial, combining like terms and dropping
  /// cancellations. Throws Error on a malformed exponent vector.
  void add_term(const ExponentVector& k, const GaussianRational& c);

  /// Coefficient of x^k (zero when absent).
  GaussianRational coefficient(const ExponentVector& k) const;

  /// Exponents with nonzero coefficient, in term order.
  std::vector<ExponentVector> support() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  int n_vars_;
  TermMap terms_;
};

/// Parses the ASCII grammar
///
///   poly   := term (('+'|'-') term)*
///   term   := [coef '*'] factor ('*' factor)* | coef
///   factor := 'x' INT ['^' INT]
///   coef   := INT ['/' INT] | '(' INT ['/' INT] [('+'|'-') INT ['/' INT] 'i'] ')'
///
/// Whitespace is ignored. A leading sign on the first term and on the real
/// part of a parenthesized coefficient is also accepted. Throws ParseError
/// with the byte offset of the problem.
SparsePolynomial parse_polynomial(std::string_view text, int n_vars);

/// Canonical form: terms in descending lexicographic exponent order, "0" for
/// the zero polynomial. parse_polynomial(render(p), n) == p.
std::string render(const SparsePolynomial& p);

}  // namespace newton_certify
