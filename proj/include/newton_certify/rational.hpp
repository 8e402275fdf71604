#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace newton_certify {

// GMP-backed; always normalized with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Element of Q(i). All polynomial coefficients and quadratic-form entries
/// live here.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(implicit)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws Error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "3", "-1/2", or "(a+bi)" / "(a-bi)" when the imaginary part is nonzero.
std::string to_string(const GaussianRational& z);

}  // namespace newton_certify
