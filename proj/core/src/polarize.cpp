#include <cmath>

#include "zerospan/hompoly.hpp"

namespace zerospan {

namespace {

Scalar pow_scalar(const Scalar& base, std::uint32_t e) {
  Scalar acc = Scalar::one(base.field());
  for (std::uint32_t i = 0; i < e; ++i) acc *= base;
  return acc;
}

Scalar monomial_eval(Field f, const MultiIndex& mi, const SparseVector& x) {
  Scalar acc = Scalar::one(f);
  for (const auto& [var, exp] : mi.entries()) {
    Scalar v = x.at(var);
    if (v.is_zero()) return Scalar::zero(f);
    acc *= pow_scalar(v, exp);
  }
  return acc;
}

Scalar factorial_ratio(Field f, std::uint32_t t, std::uint32_t m) {
  mpz_class ft, fm;
  mpz_fac_ui(ft.get_mpz_t(), t);
  mpz_fac_ui(fm.get_mpz_t(), m);
  if (f == Field::Complex64)
    return Scalar::complex64({ft.get_d() / fm.get_d(), 0.0});
  return Scalar::exact(f, make_rat(ft, fm), 0);
}

void add_term(std::map<MultiIndex, Scalar>& acc, const MultiIndex& mi,
              const Scalar& c) {
  auto it = acc.find(mi);
  if (it == acc.end()) acc.emplace(mi, c);
  else it->second += c;
}

void differentiate_monomial(const MultiIndex& mi, const Scalar& coeff,
                            const SparseVector& v, Field f,
                            std::map<MultiIndex, Scalar>& acc) {
  for (const auto& [var, exp] : mi.entries()) {
    Scalar vj = v.at(var);
    if (vj.is_zero()) continue;
    Scalar c = coeff * vj * Scalar::integer(f, long(exp));
    add_term(acc, mi.decremented(var), c);
  }
}

} // namespace

Scalar evaluate(const HomPoly& P, const SparseVector& x) {
  require_same_field(P.field(), x.field(), "evaluate");
  Scalar acc = Scalar::zero(P.field());
  for (const auto& [mi, c] : P.terms()) acc += c * monomial_eval(P.field(), mi, x);
  if (P.tail()) {
    const TailRule& tail = *P.tail();
    const std::uint32_t N = x.max_index();
    for (const auto& [gen, c] : tail.generators) {
      for (std::uint64_t s = tail.offset; s + gen.min_var() <= N; s += tail.period)
        acc += c * monomial_eval(P.field(), gen.shifted(std::uint32_t(s)), x);
    }
  }
  return acc;
}

HomPoly directional_derivative(const HomPoly& P, const SparseVector& v) {
  require_same_field(P.field(), v.field(), "directional_derivative");
  if (P.degree() == 0)
    raise(Errc::ArityMismatch, "derivative of a degree-0 polynomial");
  std::map<MultiIndex, Scalar> acc;
  for (const auto& [mi, c] : P.terms())
    differentiate_monomial(mi, c, v, P.field(), acc);
  if (P.tail()) {
    // Only shifts whose support can meet supp(v) contribute, so the result
    // is a plain finite polynomial.
    const TailRule& tail = *P.tail();
    const std::uint32_t N = v.max_index();
    for (const auto& [gen, c] : tail.generators) {
      for (std::uint64_t s = tail.offset; s + gen.min_var() <= N; s += tail.period)
        differentiate_monomial(gen.shifted(std::uint32_t(s)), c, v, P.field(), acc);
    }
  }
  return HomPoly(P.field(), P.degree() - 1, std::move(acc));
}

HomPoly derived_poly(const HomPoly& P,
                     const std::vector<std::pair<SparseVector, std::uint32_t>>& fixed,
                     std::uint32_t t) {
  std::uint32_t total = t;
  for (const auto& [v, mult] : fixed) total += mult;
  if (total != P.degree())
    raise(Errc::ArityMismatch, "fixed multiplicities plus t must equal the degree");
  HomPoly R = P;
  for (const auto& [v, mult] : fixed)
    for (std::uint32_t i = 0; i < mult; ++i) R = directional_derivative(R, v);
  R = R.scaled(factorial_ratio(P.field(), t, P.degree()));
  auto prov = std::make_shared<DerivedProvenance>();
  for (const auto& [v, mult] : fixed)
    if (mult > 0) prov->fixed.emplace_back(v, mult);
  prov->t = t;
  R.set_provenance(std::move(prov));
  return R;
}

Scalar full_polarization(const HomPoly& P, const std::vector<SparseVector>& args) {
  if (args.size() != P.degree())
    raise(Errc::ArityMismatch, "full_polarization needs exactly degree-many arguments");
  std::vector<std::pair<SparseVector, std::uint32_t>> groups;
  for (const auto& a : args) {
    bool merged = false;
    for (auto& [v, mult] : groups)
      if (v == a) { ++mult; merged = true; break; }
    if (!merged) groups.emplace_back(a, 1);
  }
  return derived_poly(P, groups, 0).constant_value();
}

namespace {

void restrict_dfs(const HomPoly& R, const std::vector<SparseVector>& basis,
                  std::size_t i, std::vector<std::uint32_t>& gamma,
                  std::map<MultiIndex, Scalar>& out) {
  const std::uint32_t remaining = R.degree();
  if (i + 1 == basis.size()) {
    HomPoly cur = R;
    for (std::uint32_t e = 0; e < remaining; ++e)
      cur = directional_derivative(cur, basis[i]);
    gamma.push_back(remaining);
    Scalar val = cur.constant_value();
    if (!val.is_zero()) {
      mpz_class fact = 1, fe;
      std::vector<MultiIndex::Entry> entries;
      for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (gamma[j] == 0) continue;
        entries.push_back({std::uint32_t(j + 1), gamma[j]});
        mpz_fac_ui(fe.get_mpz_t(), gamma[j]);
        fact *= fe;
      }
      Scalar denom = R.field() == Field::Complex64
                         ? Scalar::complex64({fact.get_d(), 0.0})
                         : Scalar::exact(R.field(), Rat(fact), 0);
      out.emplace(MultiIndex::from_entries(std::move(entries)), val / denom);
    }
    gamma.pop_back();
    return;
  }
  HomPoly cur = R;
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    if (e > 0) cur = directional_derivative(cur, basis[i]);
    gamma.push_back(e);
    restrict_dfs(cur, basis, i + 1, gamma, out);
    gamma.pop_back();
  }
}

} // namespace

std::map<MultiIndex, Scalar> restrict_to_span(const HomPoly& P,
                                              const std::vector<SparseVector>& basis) {
  if (basis.empty()) raise(Errc::EmptyBasis, "restrict_to_span with empty basis");
  for (const auto& b : basis)
    require_same_field(P.field(), b.field(), "restrict_to_span");
  std::map<MultiIndex, Scalar> out;
  std::vector<std::uint32_t> gamma;
  restrict_dfs(P, basis, 0, gamma, out);
  return out;
}

double span_scale(const HomPoly& P, const std::vector<SparseVector>& basis) {
  double coeff = P.max_coeff_abs();
  if (coeff == 0) return 1.0;
  double entry = 0;
  for (const auto& b : basis) entry = std::max(entry, b.max_entry_abs());
  return coeff * std::pow(1.0 + entry, double(P.degree()));
}

SpanCheck vanishes_on_span(const HomPoly& P, const std::vector<SparseVector>& basis,
                           const Tolerance& tol) {
  auto table = restrict_to_span(P, basis);
  if (tol.is_exact()) {
    if (table.empty()) return {true, std::nullopt};
    return {false, *table.begin()};
  }
  const double bound = tol.epsilon * span_scale(P, basis);
  for (const auto& [mi, c] : table)
    if (c.abs() > bound) return {false, std::make_pair(mi, c)};
  return {true, std::nullopt};
}

} // namespace zerospan
