#include "newton_certify/rational.hpp"

#include "newton_certify/error.hpp"

namespace newton_certify {

std::string to_string(const Rational& r) { return r.str(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re().str();
  std::string out = "(" + z.re().str();
  if (z.im() < 0) {
    out += "-" + Rational(-z.im()).str();
  } else {
    out += "+" + z.im().str();
  }
  return out + "i)";
}

}  // namespace newton_certify
