#include <doctest.h>

#include "helpers.hpp"

using namespace zt;

namespace {
const Field GR = Field::GaussianRational;
const Field QQ = Field::Rational;
} // namespace

TEST_CASE("derived_poly: Pcheck(e1, x) of x1 x2 is x2/2") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  HomPoly Q = derived_poly(P, {{e(QQ, 1), 1}}, 1);
  CHECK(Q == poly(QQ, 1, {{mono({{2, 1}}), q(1, 2)}}));
  // Oracle: full sign-sum polarization at (e1, e2).
  CHECK(sign_sum_polarization(P, {e(QQ, 1), e(QQ, 2)}) == q(1, 2));
}

TEST_CASE("derived_poly: Pcheck(e1^2, x) of x1^3 is x1") {
  HomPoly P = poly(QQ, 3, {{mono({{1, 3}}), q(1)}});
  HomPoly Q = derived_poly(P, {{e(QQ, 1), 2}}, 1);
  CHECK(Q == poly(QQ, 1, {{mono({{1, 1}}), q(1)}}));
  CHECK(sign_sum_polarization(P, {e(QQ, 1), e(QQ, 1), e(QQ, 1)}) == q(1));
}

TEST_CASE("derived_poly with no fixed arguments is the identity") {
  Rng rng(67);
  HomPoly P = rng.hompoly(GR, 3, 4, 4);
  CHECK(derived_poly(P, {}, 3) == P);
}

TEST_CASE("derived_poly records provenance") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  HomPoly Q = derived_poly(P, {{e(QQ, 1), 1}}, 1);
  REQUIRE(Q.provenance());
  CHECK(Q.provenance()->t == 1);
  REQUIRE(Q.provenance()->fixed.size() == 1);
  CHECK(Q.provenance()->fixed[0].second == 1);
}

TEST_CASE("derived_poly arity mismatch") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  CHECK_THROWS_AS((void)derived_poly(P, {{e(QQ, 1), 1}}, 2), EngineError);
}

TEST_CASE("full_polarization examples") {
  HomPoly sq = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  CHECK(full_polarization(sq, {e(QQ, 1), e(QQ, 1)}) == q(1));
  CHECK(full_polarization(sq, {e(QQ, 1), e(QQ, 2)}).is_zero());
  HomPoly prod = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  CHECK(full_polarization(prod, {e(QQ, 1), e(QQ, 2)}) == q(1, 2));
}

TEST_CASE("polarization diagonal recovers evaluation") {
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    HomPoly P = rng.hompoly(GR, 2 + i % 3, 5, 3);
    SparseVector x = rng.vector(GR, 5, 3);
    std::vector<SparseVector> diag(P.degree(), x);
    CHECK(full_polarization(P, diag) == evaluate(P, x));
  }
}

TEST_CASE("polarization is symmetric under argument permutations") {
  Rng rng(73);
  for (int i = 0; i < 25; ++i) {
    HomPoly P = rng.hompoly(GR, 3, 4, 3);
    std::vector<SparseVector> args{rng.vector(GR, 4, 2), rng.vector(GR, 4, 2),
                                   rng.vector(GR, 4, 2)};
    Scalar base = full_polarization(P, args);
    std::vector<SparseVector> perm{args[2], args[0], args[1]};
    CHECK(full_polarization(P, perm) == base);
    std::swap(perm[0], perm[1]);
    CHECK(full_polarization(P, perm) == base);
  }
}

TEST_CASE("binomial formula across all split degrees") {
  Rng rng(79);
  for (int i = 0; i < 40; ++i) {
    const std::uint32_t m = 2 + i % 3;
    HomPoly P = rng.hompoly(GR, m, 5, 4);
    SparseVector a = rng.vector(GR, 5, 3);
    SparseVector b = rng.vector(GR, 5, 3);
    Scalar rhs = Scalar::zero(GR);
    for (std::uint32_t t = 0; t <= m; ++t) {
      std::vector<SparseVector> args;
      for (std::uint32_t j = 0; j < m - t; ++j) args.push_back(a);
      for (std::uint32_t j = 0; j < t; ++j) args.push_back(b);
      rhs += binomial_scalar(GR, m, t) * full_polarization(P, args);
    }
    CHECK(evaluate(P, a.plus(b)) == rhs);
  }
}

TEST_CASE("sign-sum oracle equivalence up to degree 4") {
  Rng rng(83);
  for (std::uint32_t m = 2; m <= 4; ++m) {
    for (int i = 0; i < 12; ++i) {
      HomPoly P = rng.hompoly(GR, m, 5, 3);
      std::vector<SparseVector> args;
      for (std::uint32_t j = 0; j < m; ++j) args.push_back(rng.vector(GR, 5, 2));
      CHECK(full_polarization(P, args) == sign_sum_polarization(P, args));
    }
  }
}

TEST_CASE("derived polynomials agree with full polarization pointwise") {
  Rng rng(89);
  for (int i = 0; i < 25; ++i) {
    HomPoly P = rng.hompoly(GR, 3, 4, 3);
    SparseVector v = rng.vector(GR, 4, 2);
    SparseVector x = rng.vector(GR, 4, 2);
    HomPoly Q = derived_poly(P, {{v, 1}}, 2);
    CHECK(evaluate(Q, x) == full_polarization(P, {v, x, x}));
  }
}

TEST_CASE("restrict_to_span examples") {
  HomPoly prod = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  auto table = restrict_to_span(prod, {e(QQ, 1), e(QQ, 2)});
  REQUIRE(table.size() == 1);
  CHECK(table.at(mono({{1, 1}, {2, 1}})) == q(1));

  HomPoly sq = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  auto table2 = restrict_to_span(sq, {vec(QQ, {{1, q(1)}, {2, q(1)}})});
  REQUIRE(table2.size() == 1);
  CHECK(table2.at(mono({{1, 2}})) == q(1));

  HomPoly sums = poly(GR, 2, {{mono({{1, 2}}), gi(1)}, {mono({{2, 2}}), gi(1)}});
  auto table3 = restrict_to_span(sums, {vec(GR, {{1, gi(1)}, {2, gi(0, 1)}})});
  CHECK(table3.empty());
}

TEST_CASE("restrict_to_span matches the brute-force expansion oracle") {
  Rng rng(97);
  for (int i = 0; i < 30; ++i) {
    const std::uint32_t m = 2 + i % 2; // degrees 2 and 3
    HomPoly P = rng.hompoly(GR, m, 5, 4);
    std::vector<SparseVector> basis;
    const std::size_t q_dim = 1 + i % 3;
    for (std::size_t j = 0; j < q_dim; ++j) basis.push_back(rng.vector(GR, 5, 2));
    bool any_zero = false;
    for (const auto& b : basis) any_zero |= b.is_zero();
    if (any_zero) continue;
    CHECK(restrict_to_span(P, basis) == brute_force_restriction(P, basis));
  }
}

TEST_CASE("restrict_to_span requires a basis") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  CHECK_THROWS_AS((void)restrict_to_span(P, {}), EngineError);
}

TEST_CASE("vanishes_on_span examples") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {3, 1}}), q(1)},
                           {mono({{2, 1}, {3, 1}}), q(1)}});
  auto chk = vanishes_on_span(P, {vec(QQ, {{1, q(1)}, {2, q(-1)}})}, Tolerance::exact());
  CHECK(chk.vanishes);

  HomPoly sq = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  auto chk2 = vanishes_on_span(sq, {e(QQ, 1)}, Tolerance::exact());
  CHECK_FALSE(chk2.vanishes);
  REQUIRE(chk2.witness.has_value());
  CHECK(chk2.witness->first == mono({{1, 2}}));

  HomPoly four = poly(GR, 2, {{mono({{1, 2}}), gi(1)}, {mono({{2, 2}}), gi(1)},
                              {mono({{3, 2}}), gi(1)}, {mono({{4, 2}}), gi(1)}});
  std::vector<SparseVector> basis{vec(GR, {{1, gi(1)}, {2, gi(0, 1)}}),
                                  vec(GR, {{3, gi(1)}, {4, gi(0, 1)}})};
  CHECK(vanishes_on_span(four, basis, Tolerance::exact()).vanishes);
  CHECK(brute_force_restriction(four, basis).empty());
}

TEST_CASE("restriction of a tail polynomial goes through the derivative path") {
  TailRule tail;
  tail.offset = 0;
  tail.period = 1;
  tail.generators.emplace_back(mono({{1, 2}}), gi(1));
  HomPoly P(GR, 2, {}, tail);
  std::vector<SparseVector> basis{vec(GR, {{1, gi(1)}, {2, gi(0, 1)}}),
                                  vec(GR, {{3, gi(1)}, {4, gi(0, 1)}})};
  CHECK(vanishes_on_span(P, basis, Tolerance::exact()).vanishes);
  CHECK(restrict_to_span(P, basis) == brute_force_restriction(P, basis));
}
