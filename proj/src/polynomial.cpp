#include "newton_certify/polynomial.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "newton_certify/error.hpp"

namespace newton_certify {

int total_degree(const ExponentVector& k) { return std::accumulate(k.begin(), k.end(), 0); }

SparsePolynomial::SparsePolynomial(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 1) throw Error("polynomial needs at least one variable");
}

void SparsePolynomial::add_term(const ExponentVector& k, const GaussianRational& c) {
  if (static_cast<int>(k.size()) != n_vars_)
    throw Error("exponent vector has length " + std::to_string(k.size()) + ", expected " +
                std::to_string(n_vars_));
  for (int e : k)
    if (e < 0) throw Error("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational SparsePolynomial::coefficient(const ExponentVector& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

std::vector<ExponentVector> SparsePolynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(k);
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n_vars) : text_(text), n_vars_(n_vars) {}

  SparsePolynomial parse() {
    SparsePolynomial p(n_vars_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
    }
    parse_term(p, negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      parse_term(p, c == '-');
    }
    return p;
  }

 private:
  void parse_term(SparsePolynomial& p, bool negate) {
    skip_ws();
    GaussianRational coef{1};
    ExponentVector k(n_vars_, 0);
    if (peek() == 'x') {
      parse_factor(k);
    } else {
      coef = parse_coef();
      skip_ws();
      if (peek() != '*') {
        p.add_term(k, negate ? -coef : coef);
        return;
      }
      get();
      skip_ws();
      parse_factor(k);
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
      parse_factor(k);
    }
    p.add_term(k, negate ? -coef : coef);
  }

  void parse_factor(ExponentVector& k) {
    if (peek() != 'x') fail("expected variable 'x<index>'");
    get();
    std::size_t at = pos_;
    int index = parse_small_int();
    if (index < 1 || index > n_vars_)
      throw ParseError("variable index " + std::to_string(index) + " outside 1.." +
                           std::to_string(n_vars_),
                       at);
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      if (peek() == '-') fail("negative exponent");
      exponent = parse_small_int();
    }
    long long sum = static_cast<long long>(k[index - 1]) + exponent;
    if (sum > std::numeric_limits<int>::max()) fail("exponent too large");
    k[index - 1] = static_cast<int>(sum);
  }

  GaussianRational parse_coef() {
    if (peek() != '(') return GaussianRational{parse_fraction()};
    get();
    skip_ws();
    bool neg_re = false;
    if (peek() == '+' || peek() == '-') neg_re = get() == '-';
    skip_ws();
    Rational re = parse_fraction();
    if (neg_re) re = -re;
    Rational im = 0;
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      bool neg_im = get() == '-';
      skip_ws();
      im = parse_fraction();
      if (neg_im) im = -im;
      skip_ws();
      if (peek() != 'i') fail("expected 'i'");
      get();
      skip_ws();
    }
    if (peek() != ')') fail("expected ')'");
    get();
    return {re, im};
  }

  Rational parse_fraction() {
    BigInt num = parse_big_int();
    skip_ws();
    if (peek() != '/') return Rational(num);
    get();
    skip_ws();
    std::size_t at = pos_;
    BigInt den = parse_big_int();
    if (den == 0) throw ParseError("zero denominator", at);
    return Rational(num, den);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt parse_big_int() { return BigInt(digits()); }

  int parse_small_int() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 9) throw ParseError("integer too large", at);
    return std::stoi(d);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  int n_vars_;
  std::size_t pos_ = 0;
};

std::string monomial_string(const ExponentVector& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (k[i] > 1) out += '^' + std::to_string(k[i]);
  }
  return out;
}

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text, int n_vars) {
  if (n_vars < 1) throw Error("n_vars must be positive");
  return Parser(text, n_vars).parse();
}

std::string render(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    std::string mono = monomial_string(k);
    std::string body;
    bool negative = false;
    if (c.is_real()) {
      negative = c.re() < 0;
      Rational a = negative ? Rational(-c.re()) : c.re();
      if (mono.empty()) {
        body = a.str();
      } else if (a == 1) {
        body = mono;
      } else {
        body = a.str() + "*" + mono;
      }
    } else {
      body = to_string(c);
      if (!mono.empty()) body += "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace newton_certify
