#ifndef ZEROSPAN_TESTS_HELPERS_HPP
#define ZEROSPAN_TESTS_HELPERS_HPP

#include <random>

#include "zerospan/builder.hpp"

// Shared test shorthands and the independent oracles the expected values in
// the suites were computed with. Everything here stays off the production
// code paths it is used to check.

namespace zt {

using namespace zerospan;

inline Scalar q(long num, long den = 1) { return Scalar::rational(make_rat(num, den)); }
inline Scalar gi(long re, long im = 0) {
  return Scalar::gaussian(Rat(re), Rat(im));
}
inline Scalar gq(long rn, long rd, long in_, long id_) {
  return Scalar::gaussian(make_rat(rn, rd), make_rat(in_, id_));
}

inline MultiIndex mono(std::vector<MultiIndex::Entry> e) {
  return MultiIndex::from_entries(std::move(e));
}

inline HomPoly poly(Field f, std::uint32_t m,
                    std::vector<std::pair<MultiIndex, Scalar>> terms) {
  std::map<MultiIndex, Scalar> t;
  for (auto& [mi, c] : terms) {
    auto it = t.find(mi);
    if (it == t.end()) t.emplace(mi, c);
    else it->second += c;
  }
  return HomPoly(f, m, std::move(t));
}

inline SparseVector vec(Field f, std::vector<SparseVector::Entry> e) {
  return SparseVector(f, std::move(e));
}
inline SparseVector e(Field f, std::uint32_t i) { return SparseVector::unit(f, i); }

// ---------------------------------------------------------------------------
// Oracle: full polarization by the 2^m sign-sum identity
//   Pcheck(x_1..x_m) = (1/(2^m m!)) sum_{eps in {-1,1}^m} (prod eps) P(sum eps x).
inline Scalar sign_sum_polarization(const HomPoly& P,
                                    const std::vector<SparseVector>& args) {
  const std::uint32_t m = P.degree();
  const Field f = P.field();
  Scalar acc = Scalar::zero(f);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    SparseVector combo(f);
    long sign = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (mask & (1u << j)) {
        combo = combo.plus(args[j]);
      } else {
        combo = combo.minus(args[j]);
        sign = -sign;
      }
    }
    acc += Scalar::integer(f, sign) * evaluate(P, combo);
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), m);
  mpz_class denom = fact << m; // 2^m m!
  return acc * Scalar::exact(f, make_rat(1, denom), 0);
}

// ---------------------------------------------------------------------------
// Oracle: restriction table by direct symbolic expansion of P(sum c_i b_i)
// in the formal coordinates c_1..c_q (polynomial convolution; no
// polarization involved).
inline std::map<MultiIndex, Scalar>
brute_force_restriction(const HomPoly& P, const std::vector<SparseVector>& basis) {
  const Field f = P.field();
  std::uint32_t N = 0;
  for (const auto& b : basis) N = std::max(N, b.max_index());
  HomPoly mat = P.materialize_up_to(N);

  using CPoly = std::map<MultiIndex, Scalar>;
  auto mul = [&](const CPoly& a, const CPoly& b) {
    CPoly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        MultiIndex mi = ma.times(mb);
        Scalar c = ca * cb;
        auto it = out.find(mi);
        if (it == out.end()) out.emplace(std::move(mi), std::move(c));
        else it->second += c;
      }
    return out;
  };

  CPoly total;
  for (const auto& [mi, coeff] : mat.terms()) {
    CPoly prod{{MultiIndex{}, coeff}};
    for (const auto& [var, exp] : mi.entries()) {
      CPoly lin;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        Scalar v = basis[i].at(var);
        if (!v.is_zero()) lin.emplace(MultiIndex::unit(std::uint32_t(i + 1)), v);
      }
      for (std::uint32_t k = 0; k < exp; ++k) prod = mul(prod, lin);
    }
    for (auto& [cm, cc] : prod) {
      auto it = total.find(cm);
      if (it == total.end()) total.emplace(cm, cc);
      else it->second += cc;
    }
  }
  for (auto it = total.begin(); it != total.end();)
    it = it->second.is_zero() ? total.erase(it) : std::next(it);
  return total;
}

// Deterministic random exact data for property tests.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}

  long small(long lo, long hi) { return lo + long(g() % std::uint64_t(hi - lo + 1)); }

  Scalar scalar(Field f, bool allow_imag = true) {
    long re = small(-3, 3);
    long im = allow_imag && f == Field::GaussianRational ? small(-2, 2) : 0;
    return Scalar::exact(f, Rat(re), Rat(im));
  }

  Scalar nonzero_scalar(Field f, bool allow_imag = true) {
    for (;;) {
      Scalar s = scalar(f, allow_imag);
      if (!s.is_zero()) return s;
    }
  }

  SparseVector vector(Field f, std::uint32_t vars, std::uint32_t support) {
    std::vector<SparseVector::Entry> entries;
    for (std::uint32_t i = 0; i < support; ++i)
      entries.push_back({std::uint32_t(small(1, long(vars))), scalar(f)});
    return SparseVector(f, std::move(entries));
  }

  HomPoly hompoly(Field f, std::uint32_t m, std::uint32_t vars, std::uint32_t terms) {
    std::map<MultiIndex, Scalar> t;
    int guard = 0;
    while (t.size() < terms && ++guard < 100) {
      std::vector<MultiIndex::Entry> entries;
      std::uint32_t left = m;
      while (left > 0) {
        std::uint32_t e = std::uint32_t(small(1, long(left)));
        entries.push_back({std::uint32_t(small(1, long(vars))), e});
        left -= e;
      }
      MultiIndex mi = MultiIndex::from_entries(std::move(entries));
      Scalar c = nonzero_scalar(f);
      if (!t.count(mi)) t.emplace(std::move(mi), std::move(c));
    }
    return HomPoly(f, m, std::move(t));
  }
};

} // namespace zt

#endif
