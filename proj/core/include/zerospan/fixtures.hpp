#ifndef ZEROSPAN_FIXTURES_HPP
#define ZEROSPAN_FIXTURES_HPP

#include "zerospan/builder.hpp"

namespace zerospan::fixtures {

enum class Kind {
  ComplexSparse,
  Seeded,
  FiniteTypeReal,
  PositiveDefiniteRealTail,
  Multilinear,
};

Kind kind_from_name(const std::string& name); // UnknownKind on miss
const char* kind_name(Kind k);

struct GenParams {
  Kind kind = Kind::ComplexSparse;
  std::uint32_t n = 0;     // seed dimension ("seeded" kind)
  std::uint32_t m = 2;     // degree / arity
  std::uint32_t vars = 6;  // ambient variables touched by the finite part
  std::uint32_t terms = 4; // monomials / functionals / table entries
  std::uint64_t rng = 1;
  std::optional<Field> field; // override of the kind's default field
};

// Deterministic fixtures for the acceptance campaign. The "seeded" kind
// guarantees vanishing on span{e_1..e_n} by making every monomial touch an
// index above n; its monomials use at least two distinct variables so the
// standard basis is full of exact zeros and most slices stay exact.
PolyInput generate(const GenParams& p);

SeedSpace standard_seed(Field f, std::uint32_t n);

} // namespace zerospan::fixtures

#endif
