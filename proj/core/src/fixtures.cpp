#include "zerospan/fixtures.hpp"

#include <algorithm>
#include <random>

namespace zerospan::fixtures {

namespace {

std::uint32_t pick(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + std::uint32_t(rng() % (hi - lo + 1));
}

long pick_signed_nonzero(std::mt19937_64& rng, long mag) {
  long v = long(rng() % std::uint64_t(2 * mag)) - mag;
  return v >= 0 ? v + 1 : v;
}

Scalar small_coeff(std::mt19937_64& rng, Field f, bool allow_imag) {
  long re = pick_signed_nonzero(rng, 3);
  long im = 0;
  if (allow_imag && f == Field::GaussianRational && rng() % 2 == 0)
    im = long(rng() % 3) - 1;
  if (f == Field::Complex64) return Scalar::complex64({double(re), double(im)});
  return Scalar::exact(f, Rat(re), Rat(im));
}

// Degree-m monomial over >= 2 distinct variables, one forced above `floor`.
MultiIndex random_monomial(std::mt19937_64& rng, std::uint32_t m,
                           std::uint32_t floor, std::uint32_t vars,
                           bool squarefree_vars) {
  const std::uint32_t max_distinct = std::min<std::uint32_t>(m, 3);
  std::uint32_t distinct =
      squarefree_vars && m >= 2 ? pick(rng, 2, std::max<std::uint32_t>(2, max_distinct))
                                : pick(rng, 1, max_distinct);
  distinct = std::min(distinct, vars);
  std::vector<std::uint32_t> chosen;
  chosen.push_back(pick(rng, floor + 1, vars)); // guarantees the seed vanishing
  while (chosen.size() < distinct) {
    std::uint32_t v = pick(rng, 1, vars);
    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end())
      chosen.push_back(v);
  }
  // Spread the degree with every chosen variable getting at least one.
  std::vector<std::uint32_t> exps(chosen.size(), 1);
  for (std::uint32_t left = m - std::uint32_t(chosen.size()); left > 0; --left)
    exps[rng() % exps.size()] += 1;
  std::vector<MultiIndex::Entry> entries;
  for (std::size_t i = 0; i < chosen.size(); ++i) entries.push_back({chosen[i], exps[i]});
  return MultiIndex::from_entries(std::move(entries));
}

PolyInput gen_hom(std::mt19937_64& rng, const GenParams& p, Field f,
                  bool squarefree_vars) {
  const std::uint32_t floor = p.kind == Kind::Seeded ? p.n : 0;
  const std::uint32_t vars = std::max(p.vars, floor + 2);
  std::map<MultiIndex, Scalar> terms;
  int guard = 0;
  while (terms.size() < p.terms && ++guard < 200) {
    MultiIndex mi = random_monomial(rng, p.m, floor, vars, squarefree_vars);
    Scalar c = small_coeff(rng, f, true);
    auto it = terms.find(mi);
    if (it == terms.end()) terms.emplace(std::move(mi), std::move(c));
  }
  if (terms.empty()) raise(Errc::Internal, "fixture generator produced no terms");
  return PolyInput::from_hom(HomPoly(f, p.m, std::move(terms)));
}

PolyInput gen_finite_type(std::mt19937_64& rng, const GenParams& p, Field f) {
  std::vector<FiniteTypePoly::Term> terms;
  for (std::uint32_t j = 0; j < std::max<std::uint32_t>(1, p.terms); ++j) {
    Scalar a = small_coeff(rng, f, false);
    std::uint32_t support = pick(rng, 1, 3);
    std::vector<SparseVector::Entry> entries;
    while (entries.size() < support) {
      std::uint32_t v = pick(rng, 1, std::max(p.vars, 4u));
      bool seen = false;
      for (const auto& [idx, val] : entries) seen |= (idx == v);
      if (!seen)
        entries.push_back({v, Scalar::exact(f, Rat(pick_signed_nonzero(rng, 2)), 0)});
    }
    terms.push_back({a, SparseVector(f, std::move(entries))});
  }
  return PolyInput::from_finite(FiniteTypePoly(f, p.m, std::move(terms)));
}

PolyInput gen_tail_sum_of_squares(Field f) {
  TailRule tail;
  tail.offset = 0;
  tail.period = 1;
  tail.generators.emplace_back(MultiIndex::unit(1, 2), Scalar::one(f));
  return PolyInput::from_hom(HomPoly(f, 2, {}, std::move(tail)));
}

PolyInput gen_multilinear(std::mt19937_64& rng, const GenParams& p, Field f) {
  const std::uint32_t vars = std::max(p.vars, 3u);
  std::map<MultilinearForm::Key, Scalar> entries;
  int guard = 0;
  while (entries.size() < std::max<std::uint32_t>(1, p.terms) && ++guard < 200) {
    MultilinearForm::Key key;
    for (std::uint32_t j = 0; j < p.m; ++j) key.push_back(pick(rng, 1, vars));
    Scalar c = small_coeff(rng, f, true);
    if (!entries.count(key)) entries.emplace(std::move(key), std::move(c));
  }
  return PolyInput::from_multilinear(MultilinearForm(f, p.m, std::move(entries)));
}

} // namespace

Kind kind_from_name(const std::string& name) {
  if (name == "complex-sparse") return Kind::ComplexSparse;
  if (name == "seeded") return Kind::Seeded;
  if (name == "finite-type-real") return Kind::FiniteTypeReal;
  if (name == "positive-definite-real-tail") return Kind::PositiveDefiniteRealTail;
  if (name == "multilinear") return Kind::Multilinear;
  raise(Errc::UnknownKind, "unknown fixture kind '" + name + "'");
}

const char* kind_name(Kind k) {
  switch (k) {
  case Kind::ComplexSparse: return "complex-sparse";
  case Kind::Seeded: return "seeded";
  case Kind::FiniteTypeReal: return "finite-type-real";
  case Kind::PositiveDefiniteRealTail: return "positive-definite-real-tail";
  case Kind::Multilinear: return "multilinear";
  }
  return "?";
}

PolyInput generate(const GenParams& p) {
  std::mt19937_64 rng(p.rng);
  switch (p.kind) {
  case Kind::ComplexSparse:
    return gen_hom(rng, p, p.field.value_or(Field::GaussianRational), false);
  case Kind::Seeded:
    return gen_hom(rng, p, p.field.value_or(Field::GaussianRational), true);
  case Kind::FiniteTypeReal:
    return gen_finite_type(rng, p, p.field.value_or(Field::Rational));
  case Kind::PositiveDefiniteRealTail:
    return gen_tail_sum_of_squares(p.field.value_or(Field::Rational));
  case Kind::Multilinear:
    return gen_multilinear(rng, p, p.field.value_or(Field::GaussianRational));
  }
  raise(Errc::UnknownKind, "unhandled fixture kind");
}

SeedSpace standard_seed(Field f, std::uint32_t n) {
  SeedSpace seed;
  for (std::uint32_t i = 1; i <= n; ++i) seed.basis.push_back(SparseVector::unit(f, i));
  return seed;
}

} // namespace zerospan::fixtures
