#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "newton_certify/certificate.hpp"
#include "newton_certify/error.hpp"
#include "newton_certify/morse.hpp"
#include "newton_certify/polynomial.hpp"
#include "test_util.hpp"

using namespace newton_certify;

namespace {

MorseVerdict classify(const char* f, int n) { return classify_support(newton_polyhedron(parse_polynomial(f, n))); }

SparsePolynomial permute_variables(const SparsePolynomial& f, const std::vector<int>& pi) {
  SparsePolynomial g(f.n_vars());
  for (const auto& [k, c] : f.terms()) {
    ExponentVector k2(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) k2[pi[i]] = k[i];
    g.add_term(k2, c);
  }
  return g;
}

}  // namespace

TEST_CASE("classify_support examples") {
  MorseVerdict a = classify("x1^2 + x2^2", 2);
  CHECK(a.kind == MorseKind::GenericallyMorse);
  REQUIRE(is_matching(a.evidence));
  CHECK(std::get<MatchingCertificate>(a.evidence).sigma == Permutation{0, 1});

  MorseVerdict b = classify("x1^2 + x2^3", 2);
  CHECK(b.kind == MorseKind::NeverMorse);
  CHECK_FALSE(is_matching(b.evidence));

  MorseVerdict c = classify("x1*x2 + x1^5 + x2^7", 2);
  CHECK(c.kind == MorseKind::GenericallyMorse);

  MorseVerdict d = classify("x1^3 + x2^3", 2);
  CHECK(d.kind == MorseKind::NeverMorse);
  CHECK(d.restricted.empty());

  CHECK_THROWS_AS(classify_support(LatticePolytope::zero_dimensional()), Error);
}

TEST_CASE("is_morse examples") {
  CHECK(is_morse(parse_polynomial("x1*x2 + x2^3", 2)));
  CHECK_FALSE(is_morse(parse_polynomial("x1^2 + x2^3", 2)));
  CHECK(is_morse(parse_polynomial("x1^2 + x2^2 + x3^2", 3)));
  CHECK_THROWS_AS(is_morse(parse_polynomial("x1 + x2^2", 2)), Error);
}

TEST_CASE("is_morse depends only on the 2-jet") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> exp(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    SparsePolynomial f(n), g(n);
    for (int t = 0; t < 6; ++t) {
      ExponentVector k(n);
      for (auto& e : k) e = exp(rng) % 3;
      if (total_degree(k) == 2) {
        f.add_term(k, test_util::random_gaussian(rng));
      }
    }
    g = f;
    for (int t = 0; t < 5; ++t) {
      ExponentVector k(n);
      for (auto& e : k) e = exp(rng);
      if (total_degree(k) >= 3) g.add_term(k, test_util::random_gaussian(rng));
    }
    CHECK(is_morse(f) == is_morse(g));
  }
}

TEST_CASE("classify_support is invariant under relabeling") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> exp(0, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    SparsePolynomial f(n);
    for (int t = 0; t < 5; ++t) {
      ExponentVector k(n);
      for (auto& e : k) e = exp(rng);
      if (total_degree(k) >= 2) f.add_term(k, GaussianRational(1));
    }
    if (f.is_zero()) continue;
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    CHECK(classify_support(newton_polyhedron(f)).kind ==
          classify_support(newton_polyhedron(permute_variables(f, pi))).kind);
  }
}

TEST_CASE("genericity_gap_demo examples") {
  for (const auto& s : genericity_gap_demo(LatticePolytope(2, {{1, 1}}, true), {1, 2, 3})) {
    CHECK(s.morse);
    CHECK_FALSE(s.hessian_determinant.is_zero());
    CHECK(is_morse(s.f));
  }
  LatticePolytope full(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  for (const auto& s : genericity_gap_demo(full, {1, 2, 3, 4, 5})) CHECK(s.morse);
  LatticePolytope diag(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, true);
  auto samples = genericity_gap_demo(diag, {1});
  REQUIRE(samples.size() == 1);
  CHECK(samples[0].morse);
  CHECK(samples[0].seed == 1);
  CHECK(genericity_gap_demo(full, {9})[0].f == genericity_gap_demo(full, {9})[0].f);
  CHECK_THROWS_AS(genericity_gap_demo(LatticePolytope(2, {{2, 0}, {0, 3}}, true), {1}), Error);
}

TEST_CASE("never-Morse supports stay non-Morse with random coefficients, box {0..4}^n, n <= 3") {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 3; ++n) {
    std::vector<ExponentVector> box;
    ExponentVector k(n, 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == n) {
        if (total_degree(k) >= 2) box.push_back(k);
        return;
      }
      for (int e = 0; e <= 4; ++e) {
        k[i] = e;
        fill(i + 1);
      }
    };
    fill(0);
    int never = 0;
    for (int trial = 0; trial < 400; ++trial) {
      SparsePolynomial f(n);
      std::bernoulli_distribution keep(trial % 2 ? 0.1 : 0.3);
      for (const auto& e : box)
        if (keep(rng)) f.add_term(e, test_util::random_gaussian(rng));
      if (f.is_zero()) continue;
      MorseVerdict v = classify_support(newton_polyhedron(f));
      if (v.kind == MorseKind::NeverMorse) {
        ++never;
        CHECK_FALSE(is_morse(f));
      }
    }
    CHECK(never > 0);
  }
}
