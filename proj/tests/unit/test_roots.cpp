#include <doctest.h>

#include "helpers.hpp"

using namespace zt;

namespace {

UniPoly upoly(Field f, std::vector<Scalar> coeffs) {
  return UniPoly(f, std::move(coeffs));
}

bool contains_root(const std::vector<Scalar>& roots, const Scalar& r) {
  for (const auto& x : roots)
    if (x == r) return true;
  return false;
}

// Oracle for sqrt(2): bisection on [1, 2].
double bisect_sqrt2() {
  double lo = 1, hi = 2;
  for (int i = 0; i < 60; ++i) {
    double mid = (lo + hi) / 2;
    (mid * mid < 2 ? lo : hi) = mid;
  }
  return lo;
}

} // namespace

TEST_CASE("find_exact_roots: t^2 + 1 over Q(i)") {
  auto roots = find_exact_roots(upoly(Field::GaussianRational, {gi(1), gi(0), gi(1)}));
  REQUIRE(roots.size() == 2);
  CHECK(contains_root(roots, gi(0, 1)));
  CHECK(contains_root(roots, gi(0, -1)));
}

TEST_CASE("find_exact_roots: linear t - 3/2") {
  auto roots = find_exact_roots(upoly(Field::Rational, {q(-3, 2), q(1)}));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == q(3, 2));
}

TEST_CASE("find_exact_roots: t^3 - 1 finds 1; complex cube roots stay outside Q(i)") {
  auto roots =
      find_exact_roots(upoly(Field::GaussianRational, {gi(-1), gi(0), gi(0), gi(1)}));
  CHECK(contains_root(roots, gi(1)));
  // Oracle: the primitive cube roots of unity are not Gaussian rationals;
  // numerically they sit at (-1 +- sqrt(3) i)/2 and no returned root may be
  // anywhere near them.
  for (const auto& r : roots) {
    CHECK(std::abs(r.approx() - std::complex<double>(-0.5, 0.8660254)) > 1e-3);
    CHECK(std::abs(r.approx() - std::complex<double>(-0.5, -0.8660254)) > 1e-3);
  }
  CHECK(roots.size() == 1);
}

TEST_CASE("find_exact_roots: every output is a bit-exact root (random cubics)") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    std::vector<Scalar> coeffs;
    for (int k = 0; k < 4; ++k) coeffs.push_back(rng.scalar(Field::GaussianRational));
    if (coeffs.back().is_zero()) coeffs.back() = gi(1);
    UniPoly p = upoly(Field::GaussianRational, coeffs);
    if (p.is_zero()) continue;
    for (const auto& r : find_exact_roots(p)) CHECK(p.evaluate(r).is_zero());
  }
}

TEST_CASE("find_exact_roots rejects the zero polynomial") {
  CHECK_THROWS_AS((void)find_exact_roots(upoly(Field::Rational, {})), EngineError);
}

TEST_CASE("find_approx_roots: t^2 + 1 within 1e-12 of +-i") {
  UniPoly p(Field::Complex64,
            {Scalar::complex64({1, 0}), Scalar::complex64({0, 0}),
             Scalar::complex64({1, 0})});
  auto roots = find_approx_roots(p, Tolerance::approx(1e-12));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    double d1 = std::abs(r.approx() - std::complex<double>(0, 1));
    double d2 = std::abs(r.approx() - std::complex<double>(0, -1));
    CHECK(std::min(d1, d2) < 1e-6);
    CHECK(std::abs(p.evaluate(r.approx())) <= 1e-12 * p.root_scale(r.approx()));
  }
}

TEST_CASE("find_approx_roots: t^2 - 2 against the bisection oracle") {
  UniPoly p = upoly(Field::Rational, {q(-2), q(0), q(1)});
  auto roots = find_approx_roots(p, Tolerance::approx(1e-12));
  const double s2 = bisect_sqrt2();
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots)
    CHECK(std::min(std::abs(r.approx() - s2), std::abs(r.approx() + s2)) < 1e-9);
}

TEST_CASE("find_approx_roots: degree-0 nonzero raises ZeroDegree") {
  try {
    (void)find_approx_roots(upoly(Field::Rational, {q(5)}), Tolerance::approx(1e-9));
    FAIL("expected ZeroDegree");
  } catch (const EngineError& e) {
    CHECK(e.code() == Errc::ZeroDegree);
  }
}

TEST_CASE("residual bound holds for every approximate root") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    std::vector<Scalar> coeffs;
    for (int k = 0; k < 5; ++k) coeffs.push_back(rng.scalar(Field::GaussianRational));
    if (coeffs.back().is_zero()) coeffs.back() = gi(2);
    UniPoly p = upoly(Field::GaussianRational, coeffs);
    if (p.degree() < 1) continue;
    auto roots = find_approx_roots(p, Tolerance::approx(1e-10));
    CHECK(roots.size() == std::size_t(p.degree()));
    for (const auto& r : roots)
      CHECK(std::abs(p.evaluate(r.approx())) <= 1e-10 * p.root_scale(r.approx()));
  }
}
