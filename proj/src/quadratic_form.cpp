#include "newton_certify/quadratic_form.hpp"

#include <utility>

#include "newton_certify/error.hpp"

namespace newton_certify {

QuadraticForm::QuadraticForm(int n) : n_(n) {
  if (n < 0) throw Error("negative dimension");
  entries_.resize(static_cast<std::size_t>(n) * n);
}

QuadraticForm::QuadraticForm(int n, std::vector<GaussianRational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n)
    throw Error("quadratic form needs n*n entries");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (entries_[index(i, j)] != entries_[index(j, i)]) throw Error("matrix is not symmetric");
}

void QuadraticForm::set(int i, int j, const GaussianRational& value) {
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

namespace {

void require_singular_point(const SparsePolynomial& f) {
  for (const auto& [k, c] : f.terms())
    if (total_degree(k) < 2)
      throw Error(total_degree(k) == 0 ? "polynomial has a nonzero constant term"
                                       : "polynomial has a nonzero linear term");
}

GaussianRational bareiss_integer(int n, std::span<const GaussianRational> a) {
  std::vector<BigInt> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = boost::multiprecision::numerator(a[i].re());
  auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return GaussianRational{};
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  BigInt det = n == 0 ? BigInt(1) : at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return GaussianRational{Rational(det)};
}

GaussianRational eliminate_field(int n, std::span<const GaussianRational> a) {
  std::vector<GaussianRational> m(a.begin(), a.end());
  auto at = [&](int i, int j) -> GaussianRational& { return m[static_cast<std::size_t>(i) * n + j]; };
  GaussianRational det{1};
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!at(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return GaussianRational{};
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      det = -det;
    }
    det *= at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      GaussianRational factor = at(i, k) / at(k, k);
      for (int j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
  }
  return det;
}

}  // namespace

QuadraticForm quadratic_part(const SparsePolynomial& f) {
  require_singular_point(f);
  const int n = f.n_vars();
  QuadraticForm b(n);
  for (const auto& [k, c] : f.terms()) {
    if (total_degree(k) != 2) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < k[i]; ++e) idx.push_back(i);
    if (idx[0] == idx[1]) {
      b.set(idx[0], idx[0], c);
    } else {
      b.set(idx[0], idx[1], c / GaussianRational{2});
    }
  }
  return b;
}

QuadraticForm hessian_at_zero(const SparsePolynomial& f) {
  require_singular_point(f);
  const int n = f.n_vars();
  QuadraticForm h(n);
  for (const auto& [k, c] : f.terms()) {
    if (total_degree(k) != 2) continue;
    int i = 0;
    while (k[i] == 0) ++i;
    if (k[i] == 2) {
      h.set(i, i, c + c);
    } else {
      int j = i + 1;
      while (k[j] == 0) ++j;
      h.set(i, j, c);
    }
  }
  return h;
}

GaussianRational determinant(int n, std::span<const GaussianRational> row_major) {
  if (n < 0 || row_major.size() != static_cast<std::size_t>(n) * n)
    throw Error("determinant needs a square matrix");
  bool integral = true;
  for (const auto& z : row_major)
    if (!z.is_real() || !is_integer(z.re())) {
      integral = false;
      break;
    }
  return integral ? bareiss_integer(n, row_major) : eliminate_field(n, row_major);
}

GaussianRational determinant(const QuadraticForm& b) { return determinant(b.n(), b.entries()); }

SparsePolynomial to_polynomial(const QuadraticForm& b) {
  SparsePolynomial p(b.n());
  for (int i = 0; i < b.n(); ++i) {
    for (int j = i; j < b.n(); ++j) {
      ExponentVector k(b.n(), 0);
      ++k[i];
      ++k[j];
      p.add_term(k, i == j ? b(i, i) : b(i, j) * GaussianRational{2});
    }
  }
  return p;
}

}  // namespace newton_certify
