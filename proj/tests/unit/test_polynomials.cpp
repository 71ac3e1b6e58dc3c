#include <doctest.h>

#include "helpers.hpp"

using namespace zt;

namespace {

const Field GR = Field::GaussianRational;
const Field QQ = Field::Rational;

HomPoly tail_shift_product() {
  // sum_{k>=0} x_{1+k} x_{2+k}
  TailRule tail;
  tail.offset = 0;
  tail.period = 1;
  tail.generators.emplace_back(mono({{1, 1}, {2, 1}}), q(1));
  return HomPoly(QQ, 2, {}, tail);
}

HomPoly tail_sum_of_squares(Field f) {
  TailRule tail;
  tail.offset = 0;
  tail.period = 1;
  tail.generators.emplace_back(mono({{1, 2}}), Scalar::one(f));
  return HomPoly(f, 2, {}, tail);
}

} // namespace

TEST_CASE("evaluate: single monomial") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  CHECK(evaluate(P, vec(QQ, {{1, q(1)}, {2, q(1)}})) == q(1));
}

TEST_CASE("evaluate: x1^2 + x2^2 kills e1 + i e2") {
  HomPoly P = poly(GR, 2, {{mono({{1, 2}}), gi(1)}, {mono({{2, 2}}), gi(1)}});
  CHECK(evaluate(P, vec(GR, {{1, gi(1)}, {2, gi(0, 1)}})).is_zero());
}

TEST_CASE("evaluate: tail rule activates only fitting shifts") {
  HomPoly P = tail_shift_product();
  // Oracle: materializing every shift with support in [1..2] leaves only
  // x1 x2.
  HomPoly mat = P.materialize_up_to(2);
  SparseVector x = vec(QQ, {{1, q(1)}, {2, q(1)}});
  CHECK(evaluate(mat, x) == q(1));
  CHECK(evaluate(P, x) == q(1));
}

TEST_CASE("tail soundness: evaluation equals materialization on the support window") {
  Rng rng(41);
  HomPoly P = tail_shift_product();
  for (int i = 0; i < 50; ++i) {
    SparseVector x = rng.vector(QQ, 8, 4);
    HomPoly mat = P.materialize_up_to(8 + P.tail()->window());
    CHECK(evaluate(P, x) == evaluate(mat, x));
  }
}

TEST_CASE("homogeneity holds bit-exactly") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    HomPoly P = rng.hompoly(GR, 2 + i % 3, 5, 4);
    SparseVector x = rng.vector(GR, 5, 3);
    Scalar lambda = rng.scalar(GR);
    Scalar lhs = evaluate(P, x.scaled(lambda));
    Scalar pw = Scalar::one(GR);
    for (std::uint32_t k = 0; k < P.degree(); ++k) pw *= lambda;
    CHECK(lhs == pw * evaluate(P, x));
  }
}

TEST_CASE("directional_derivative: power rule") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  HomPoly D = directional_derivative(P, e(QQ, 1));
  CHECK(D == poly(QQ, 1, {{mono({{1, 1}}), q(2)}}));
}

TEST_CASE("directional_derivative: product of distinct variables") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  CHECK(directional_derivative(P, e(QQ, 1)) == poly(QQ, 1, {{mono({{2, 1}}), q(1)}}));
}

TEST_CASE("directional_derivative of a tail collapses to a finite polynomial") {
  HomPoly P = tail_shift_product();
  HomPoly D = directional_derivative(P, e(QQ, 2));
  // Shifts k = 0 and k = 1 touch index 2: derivative x1 + x3.
  CHECK_FALSE(D.tail().has_value());
  CHECK(D == poly(QQ, 1, {{mono({{1, 1}}), q(1)}, {mono({{3, 1}}), q(1)}}));
  // Oracle: materialize through index 3 and differentiate term by term.
  HomPoly mat = P.materialize_up_to(3);
  CHECK(directional_derivative(mat, e(QQ, 2)) == D);
}

TEST_CASE("degree-0 constants and invalid degrees") {
  HomPoly c = HomPoly::constant(q(5));
  CHECK(c.degree() == 0);
  CHECK(c.constant_value() == q(5));
  CHECK_THROWS_AS((void)directional_derivative(c, e(QQ, 1)), EngineError);
  CHECK_THROWS_AS(HomPoly(QQ, 2, {{mono({{1, 1}}), q(1)}}), EngineError);
}

TEST_CASE("finite_type_to_hompoly: binomial square") {
  FiniteTypePoly F(QQ, 2, {{q(1), vec(QQ, {{1, q(1)}, {2, q(1)}})}});
  HomPoly expect = poly(QQ, 2, {{mono({{1, 2}}), q(1)},
                                {mono({{1, 1}, {2, 1}}), q(2)},
                                {mono({{2, 2}}), q(1)}});
  CHECK(finite_type_to_hompoly(F) == expect);
}

TEST_CASE("finite_type_to_hompoly: difference of squares") {
  FiniteTypePoly F(QQ, 2, {{q(1), e(QQ, 1)}, {q(-1), e(QQ, 2)}});
  CHECK(finite_type_to_hompoly(F) ==
        poly(QQ, 2, {{mono({{1, 2}}), q(1)}, {mono({{2, 2}}), q(-1)}}));
}

TEST_CASE("finite_type_to_hompoly: 2(x1 - x3)^3 against pointwise oracle") {
  FiniteTypePoly F(QQ, 3, {{q(2), vec(QQ, {{1, q(1)}, {3, q(-1)}})}});
  HomPoly P = finite_type_to_hompoly(F);
  CHECK(P == poly(QQ, 3, {{mono({{1, 3}}), q(2)},
                          {mono({{1, 2}, {3, 1}}), q(-6)},
                          {mono({{1, 1}, {3, 2}}), q(6)},
                          {mono({{3, 3}}), q(-2)}}));
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    SparseVector x = rng.vector(QQ, 5, 3);
    CHECK(evaluate(P, x) == F.evaluate_at(x));
  }
}

TEST_CASE("finite-type conversion agrees pointwise on random instances") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    std::vector<FiniteTypePoly::Term> terms;
    for (int j = 0; j < 3; ++j)
      terms.push_back({rng.nonzero_scalar(QQ, false), rng.vector(QQ, 4, 2)});
    FiniteTypePoly F(QQ, 2 + i % 2, terms);
    HomPoly P = finite_type_to_hompoly(F);
    for (int k = 0; k < 5; ++k) {
      SparseVector x = rng.vector(QQ, 4, 3);
      CHECK(evaluate(P, x) == F.evaluate_at(x));
    }
  }
}

TEST_CASE("try_finite_type: quadratics always decompose") {
  Rng rng(59);
  for (int i = 0; i < 30; ++i) {
    HomPoly P = rng.hompoly(QQ, 2, 5, 4);
    if (P.is_structurally_zero()) continue;
    auto F = try_finite_type(P);
    REQUIRE(F.has_value());
    CHECK(finite_type_to_hompoly(*F) == P);
  }
}

TEST_CASE("try_finite_type: cross term uses the hyperbolic split") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  auto F = try_finite_type(P);
  REQUIRE(F.has_value());
  CHECK(finite_type_to_hompoly(*F) == P);
}

TEST_CASE("try_finite_type: diagonal cubics only, tails never") {
  CHECK(try_finite_type(poly(QQ, 3, {{mono({{1, 3}}), q(2)}, {mono({{4, 3}}), q(-1)}}))
            .has_value());
  CHECK_FALSE(try_finite_type(poly(QQ, 3, {{mono({{1, 2}, {2, 1}}), q(1)}})).has_value());
  CHECK_FALSE(try_finite_type(tail_sum_of_squares(QQ)).has_value());
}

TEST_CASE("multilinear_eval: ordered slots") {
  MultilinearForm A(QQ, 2, {{{1, 2}, q(1)}});
  CHECK(multilinear_eval(A, {e(QQ, 1), e(QQ, 2)}) == q(1));
  CHECK(multilinear_eval(A, {e(QQ, 2), e(QQ, 1)}).is_zero());
}

TEST_CASE("multilinear_eval: bilinear expansion oracle") {
  MultilinearForm A(QQ, 2, {{{1, 1}, q(1)}, {{2, 2}, q(1)}});
  SparseVector a = vec(QQ, {{1, q(1)}, {2, q(1)}});
  SparseVector b = vec(QQ, {{1, q(1)}, {2, q(-1)}});
  CHECK(multilinear_eval(A, {a, b}).is_zero());
}

TEST_CASE("multilinear arity is enforced and linearity per slot holds") {
  Rng rng(61);
  MultilinearForm A(QQ, 3,
                    {{{1, 2, 3}, q(2)}, {{2, 2, 1}, q(-1)}, {{3, 1, 1}, q(1)}});
  CHECK_THROWS_AS((void)multilinear_eval(A, {e(QQ, 1), e(QQ, 2)}), EngineError);
  for (int i = 0; i < 30; ++i) {
    SparseVector x = rng.vector(QQ, 4, 2), y = rng.vector(QQ, 4, 2),
                 z = rng.vector(QQ, 4, 2), w = rng.vector(QQ, 4, 2);
    Scalar lhs = multilinear_eval(A, {x.plus(w.scaled(q(3))), y, z});
    Scalar rhs = multilinear_eval(A, {x, y, z}) +
                 q(3) * multilinear_eval(A, {w, y, z});
    CHECK(lhs == rhs);
  }
}
