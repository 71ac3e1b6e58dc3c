#include <doctest.h>

#include "helpers.hpp"

using namespace zt;

namespace {
const Field QQ = Field::Rational;
const Field GR = Field::GaussianRational;
} // namespace

TEST_CASE("binary_slice: x1^2 + x2^2 along (e1, e2) is 1 + t^2") {
  HomPoly P = poly(GR, 2, {{mono({{1, 2}}), gi(1)}, {mono({{2, 2}}), gi(1)}});
  SliceReport rep = binary_slice(P, e(GR, 1), e(GR, 2));
  CHECK(rep.slice.coefficients() == std::vector<Scalar>{gi(1), gi(0), gi(1)});
}

TEST_CASE("binary_slice: x1 x2 along (e1, e2) is t") {
  HomPoly P = poly(GR, 2, {{mono({{1, 1}, {2, 1}}), gi(1)}});
  SliceReport rep = binary_slice(P, e(GR, 1), e(GR, 2));
  CHECK(rep.slice.coefficients() == std::vector<Scalar>{gi(0), gi(1)});
}

TEST_CASE("binary_slice: x1^3 - x2^3 along (e1 + e2, e2)") {
  HomPoly P = poly(QQ, 3, {{mono({{1, 3}}), q(1)}, {mono({{2, 3}}), q(-1)}});
  SliceReport rep = binary_slice(P, vec(QQ, {{1, q(1)}, {2, q(1)}}), e(QQ, 2));
  // Oracle: P(e1 + (1+t) e2) = 1 - (1+t)^3 = -3t - 3t^2 - t^3.
  CHECK(rep.slice.coefficients() ==
        std::vector<Scalar>{q(0), q(-3), q(-3), q(-1)});
}

TEST_CASE("slice fidelity at random parameters") {
  Rng rng(107);
  for (int i = 0; i < 20; ++i) {
    HomPoly P = rng.hompoly(GR, 2 + i % 3, 5, 3);
    SparseVector u = rng.vector(GR, 5, 2);
    SparseVector v = rng.vector(GR, 5, 2);
    if (u.is_zero() || v.is_zero()) continue;
    SliceReport rep = binary_slice(P, u, v);
    for (int k = 0; k < 20; ++k) {
      Scalar t = rng.scalar(GR);
      CHECK(rep.slice.evaluate(t) == evaluate(P, u.plus(v.scaled(t))));
    }
  }
}

TEST_CASE("find_zero_complex: x1^2 + x2^2 returns e1 + i e2 exactly") {
  HomPoly P = poly(GR, 2, {{mono({{1, 2}}), gi(1)}, {mono({{2, 2}}), gi(1)}});
  Subspace S = full_space(GR);
  ZeroWitness w = find_zero_complex(P, S);
  CHECK(w.exact);
  CHECK(evaluate(P, w.vector).is_zero());
  CHECK(w.vector == vec(GR, {{1, gi(1)}, {2, gi(0, 1)}}));
  REQUIRE(w.slice.has_value());
  CHECK(*w.slice->root == gi(0, 1)); // the larger of the tied roots +-i
}

TEST_CASE("find_zero_complex: x1 x2 vanishes on the first pulled vector") {
  HomPoly P = poly(GR, 2, {{mono({{1, 1}, {2, 1}}), gi(1)}});
  Subspace S = full_space(GR);
  ZeroWitness w = find_zero_complex(P, S);
  CHECK(w.kind == ZeroWitness::Kind::Direct);
  CHECK(w.vector == e(GR, 1));
}

TEST_CASE("find_zero_complex: x1^2 + 2 x2^2 has no Gaussian-rational slice root") {
  // Oracle: +-i/sqrt(2) is not in Q(i) -- the slice 1 + 2 t^2 has no root in
  // the field (bounded divisor search plus quadratic formula agree).
  UniPoly slice(GR, {gi(1), gi(0), gi(2)});
  CHECK(find_exact_roots(slice).empty());
  HomPoly P = poly(GR, 2, {{mono({{1, 2}}), gi(1)}, {mono({{2, 2}}), gi(2)}});
  Subspace S = full_space(GR);
  ZeroWitness w = find_zero_complex(P, S);
  // The engine keeps pulling pairs: the third basis vector is a bit-exact
  // zero, so exactness is preserved rather than degrading to a residual.
  CHECK(w.exact);
  CHECK(evaluate(P, w.vector).is_zero());
}

TEST_CASE("find_zero_complex degrades to a snapped approximate root when cornered") {
  // P = x1^2 + 2 x2^2 + 2 x3^2 + ...: every basis vector misses the zero set
  // and the first slice 1 + 2 t^2 has no root in Q(i); with budget 1 the
  // engine must take the approximate route and keep the residual bound.
  TailRule tail;
  tail.offset = 1;
  tail.period = 1;
  tail.generators.emplace_back(mono({{1, 2}}), gi(2));
  HomPoly P(GR, 2, {{mono({{1, 2}}), gi(1)}}, tail);
  Subspace S = full_space(GR);
  ZeroFindOptions opts;
  opts.retry_budget = 1;
  opts.tolerance = Tolerance::approx(1e-9);
  ZeroWitness w = find_zero_complex(P, S, opts);
  CHECK_FALSE(w.exact);
  CHECK(field_is_exact(w.vector.field())); // the root was snapped into Q(i)
  Scalar residual = evaluate(P, w.vector);
  CHECK(residual.abs() <= 1e-9 * span_scale(P, {w.vector}));
}

TEST_CASE("find_zero_complex rejects the rational backend") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 2}}), q(1)}});
  Subspace S = full_space(QQ);
  try {
    (void)find_zero_complex(P, S);
    FAIL("expected RealFieldRejected");
  } catch (const EngineError& e) {
    CHECK(e.code() == Errc::RealFieldRejected);
  }
}

TEST_CASE("find_zero_finite_type: kernel membership") {
  FiniteTypePoly F(QQ, 2, {{q(1), vec(QQ, {{1, q(1)}, {2, q(1)}})}});
  Subspace S = full_space(QQ);
  ZeroWitness w = find_zero_finite_type(F, S);
  CHECK(w.exact);
  CHECK(F.terms()[0].functional.pair(w.vector).is_zero());
}

TEST_CASE("find_zero_finite_type: two coordinate functionals") {
  FiniteTypePoly F(QQ, 2, {{q(1), e(QQ, 1)}, {q(1), e(QQ, 2)}});
  Subspace S = full_space(QQ);
  ZeroWitness w = find_zero_finite_type(F, S);
  CHECK(w.vector.min_index() >= 3);
}

TEST_CASE("find_zero_finite_type within a kernel stream") {
  FiniteTypePoly F(QQ, 2, {{q(1, 4), vec(QQ, {{1, q(1)}, {2, q(1)}})},
                           {q(-1, 4), vec(QQ, {{1, q(1)}, {2, q(-1)}})}});
  Subspace S = kernel_within(full_space(QQ), {e(QQ, 3)});
  ZeroWitness w = find_zero_finite_type(F, S);
  for (const auto& t : F.terms()) CHECK(t.functional.pair(w.vector).is_zero());
  CHECK(e(QQ, 3).pair(w.vector).is_zero());
}

TEST_CASE("probe_real_definite: the tail of squares never shows a real root") {
  TailRule tail;
  tail.offset = 0;
  tail.period = 1;
  tail.generators.emplace_back(mono({{1, 2}}), q(1));
  HomPoly P(QQ, 2, {}, tail);
  Subspace S = full_space(QQ);
  ProbeReport rep = probe_real_definite(P, S, 5);
  CHECK(rep.kind == ProbeReport::Kind::NoRealRootOnProbedSlices);
  CHECK(rep.slices.size() == 5);
  for (const auto& s : rep.slices) {
    REQUIRE(s.discriminant.has_value());
    CHECK(*s.discriminant < 0);
    CHECK(s.no_real_root_certified);
  }
}

TEST_CASE("probe_real_definite: difference of squares finds t = 1") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 2}}), q(1)}, {mono({{2, 2}}), q(-1)}});
  Subspace S = full_space(QQ);
  ProbeReport rep = probe_real_definite(P, S, 3);
  CHECK(rep.kind == ProbeReport::Kind::RootFound);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == vec(QQ, {{1, q(1)}, {2, q(1)}}));
}

TEST_CASE("probe_real_definite: x1 x2 reports the first basis vector") {
  HomPoly P = poly(QQ, 2, {{mono({{1, 1}, {2, 1}}), q(1)}});
  Subspace S = full_space(QQ);
  ProbeReport rep = probe_real_definite(P, S, 3);
  CHECK(rep.kind == ProbeReport::Kind::RootFound);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == e(QQ, 1));
}

TEST_CASE("find_zero_real surfaces NoRealZero with slice diagnostics") {
  TailRule tail;
  tail.offset = 0;
  tail.period = 1;
  tail.generators.emplace_back(mono({{1, 2}}), q(1));
  HomPoly P(QQ, 2, {}, tail);
  Subspace S = full_space(QQ);
  try {
    (void)find_zero_real(P, S);
    FAIL("expected NoRealZero");
  } catch (const EngineError& e) {
    CHECK(e.code() == Errc::NoRealZero);
    CHECK(e.detail().find("NoRealRootOnProbedSlices") != std::string::npos);
  }
}
