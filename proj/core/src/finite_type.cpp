#include "zerospan/finite_type.hpp"

#include <map>

namespace zerospan {

FiniteTypePoly::FiniteTypePoly(Field f, std::uint32_t degree, std::vector<Term> terms)
    : field_(f), degree_(degree), terms_(std::move(terms)) {
  if (degree_ < 1) raise(Errc::InvalidInput, "finite-type exponent must be >= 1");
  for (auto& t : terms_) {
    require_same_field(f, t.weight.field(), "FiniteTypePoly");
    require_same_field(f, t.functional.field(), "FiniteTypePoly");
  }
}

std::vector<SparseVector> FiniteTypePoly::functionals() const {
  std::vector<SparseVector> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.functional);
  return out;
}

Scalar FiniteTypePoly::evaluate_at(const SparseVector& x) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.functional.pair(x);
    Scalar p = Scalar::one(field_);
    for (std::uint32_t i = 0; i < degree_; ++i) p *= v;
    acc += t.weight * p;
  }
  return acc;
}

namespace {

// (sum_v phi[v] x_v)^m expanded by the multinomial theorem over the support.
void expand_power(const SparseVector& phi, std::uint32_t m, const Scalar& weight,
                  std::map<MultiIndex, Scalar>& acc) {
  const auto& sup = phi.entries();
  if (sup.empty()) return; // zero functional contributes nothing (m >= 1)
  std::vector<std::uint32_t> ks(sup.size(), 0);

  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == sup.size()) {
      ks[i] = left;
      Scalar c = weight;
      mpz_class fm, fe, denom(1);
      mpz_fac_ui(fm.get_mpz_t(), m);
      std::vector<MultiIndex::Entry> entries;
      for (std::size_t j = 0; j < ks.size(); ++j) {
        for (std::uint32_t e = 0; e < ks[j]; ++e) c *= sup[j].second;
        if (ks[j] > 0) entries.push_back({sup[j].first, ks[j]});
        mpz_fac_ui(fe.get_mpz_t(), ks[j]);
        denom *= fe;
      }
      Scalar mult = phi.field() == Field::Complex64
                        ? Scalar::complex64({fm.get_d() / denom.get_d(), 0.0})
                        : Scalar::exact(phi.field(), make_rat(fm, denom), 0);
      MultiIndex mi = MultiIndex::from_entries(std::move(entries));
      auto it = acc.find(mi);
      if (it == acc.end()) acc.emplace(mi, c * mult);
      else it->second += c * mult;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      ks[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, m);
}

} // namespace

HomPoly finite_type_to_hompoly(const FiniteTypePoly& F) {
  std::map<MultiIndex, Scalar> acc;
  for (const auto& t : F.terms()) expand_power(t.functional, F.degree(), t.weight, acc);
  return HomPoly(F.field(), F.degree(), std::move(acc));
}

namespace {

using PairKey = std::pair<std::uint32_t, std::uint32_t>; // i <= j

// Lagrange reduction of a quadratic form into sum_j c_j * (linear_j)^2.
std::optional<std::vector<FiniteTypePoly::Term>>
diagonalize_quadratic(const HomPoly& P) {
  const Field f = P.field();
  std::map<PairKey, Scalar> q;
  for (const auto& [mi, c] : P.terms()) {
    const auto& e = mi.entries();
    if (e.size() == 1) q[{e[0].first, e[0].first}] = c;
    else q[{e[0].first, e[1].first}] = c;
  }

  auto subtract_square = [&](std::map<PairKey, Scalar>& form, const Scalar& w,
                             const SparseVector& phi) {
    const auto& sup = phi.entries();
    for (std::size_t a = 0; a < sup.size(); ++a)
      for (std::size_t b = a; b < sup.size(); ++b) {
        Scalar c = w * sup[a].second * sup[b].second;
        if (a != b) c = c * Scalar::integer(f, 2);
        PairKey key{sup[a].first, sup[b].first};
        auto it = form.find(key);
        if (it == form.end()) form.emplace(key, c.negate());
        else it->second -= c;
        if (form.count(key) && form[key].is_zero()) form.erase(key);
      }
  };

  std::vector<FiniteTypePoly::Term> terms;
  int guard = 0;
  while (!q.empty()) {
    if (++guard > 1000) return std::nullopt;
    // Case 1: some x_i^2 present; complete the square at the smallest i.
    std::optional<std::uint32_t> diag;
    for (const auto& [key, c] : q)
      if (key.first == key.second) { diag = key.first; break; }
    if (diag) {
      const std::uint32_t i = *diag;
      Scalar cii = q[{i, i}];
      std::vector<SparseVector::Entry> phi_entries{{i, Scalar::one(f)}};
      Scalar two_cii = Scalar::integer(f, 2) * cii;
      for (const auto& [key, c] : q) {
        if (key.first == i && key.second != i)
          phi_entries.push_back({key.second, c / two_cii});
        else if (key.second == i && key.first != i)
          phi_entries.push_back({key.first, c / two_cii});
      }
      SparseVector phi(f, std::move(phi_entries));
      terms.push_back({cii, phi});
      subtract_square(q, cii, phi);
      continue;
    }
    // Case 2: purely off-diagonal; split the smallest cross term into the
    // hyperbolic pair a x_i x_j + x_i L_i + x_j L_j =
    // (1/(4a)) (A+B)^2 - (1/(4a)) (A-B)^2 with A = a x_i + L_j,
    // B = a x_j + L_i, leaving a form without x_i or x_j.
    auto [key, a] = *q.begin();
    const std::uint32_t i = key.first, j = key.second;
    std::vector<SparseVector::Entry> li, lj; // L_i = sum_{k != i,j} q_ik x_k
    for (const auto& [k2, c] : q) {
      if (k2.first == i && k2.second != j) li.push_back({k2.second, c});
      else if (k2.second == i) li.push_back({k2.first, c});
      else if (k2.first == j && k2.second != i) lj.push_back({k2.second, c});
      else if (k2.second == j && k2.first != i) lj.push_back({k2.first, c});
    }
    SparseVector A = SparseVector(f, {{i, a}}).plus(SparseVector(f, lj));
    SparseVector B = SparseVector(f, {{j, a}}).plus(SparseVector(f, li));
    Scalar w = (Scalar::integer(f, 4) * a).inverse();
    FiniteTypePoly::Term plus{w, A.plus(B)};
    FiniteTypePoly::Term minus{w.negate(), A.minus(B)};
    terms.push_back(plus);
    terms.push_back(minus);
    subtract_square(q, plus.weight, plus.functional);
    subtract_square(q, minus.weight, minus.functional);
  }
  return terms;
}

} // namespace

std::optional<FiniteTypePoly> try_finite_type(const HomPoly& P) {
  if (P.tail()) return std::nullopt;
  const Field f = P.field();
  const std::uint32_t m = P.degree();
  if (m == 0 || P.is_structurally_zero()) return std::nullopt;

  if (m == 1) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& [mi, c] : P.terms())
      entries.push_back({mi.entries().front().first, c});
    return FiniteTypePoly(f, 1, {{Scalar::one(f), SparseVector(f, std::move(entries))}});
  }

  if (m == 2) {
    auto terms = diagonalize_quadratic(P);
    if (!terms) return std::nullopt;
    FiniteTypePoly F(f, 2, std::move(*terms));
    if (!(finite_type_to_hompoly(F) == P)) return std::nullopt;
    return F;
  }

  // Degree >= 3: only the diagonal shape sum_j a_j x_j^m is recognized.
  std::vector<FiniteTypePoly::Term> terms;
  for (const auto& [mi, c] : P.terms()) {
    if (mi.entries().size() != 1) return std::nullopt;
    terms.push_back({c, SparseVector::unit(f, mi.entries().front().first)});
  }
  return FiniteTypePoly(f, m, std::move(terms));
}

} // namespace zerospan
