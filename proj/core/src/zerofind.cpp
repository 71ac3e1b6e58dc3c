#include "zerospan/zerofind.hpp"

#include <sstream>

namespace zerospan {

SliceReport binary_slice(const HomPoly& P, const SparseVector& u,
                         const SparseVector& v) {
  if (u.is_zero() || v.is_zero())
    raise(Errc::ZeroVector, "binary_slice needs nonzero directions");
  require_same_field(P.field(), u.field(), "binary_slice");
  require_same_field(P.field(), v.field(), "binary_slice");
  const std::uint32_t m = P.degree();
  std::vector<Scalar> coeffs;
  coeffs.reserve(m + 1);
  for (std::uint32_t t = 0; t <= m; ++t) {
    std::vector<std::pair<SparseVector, std::uint32_t>> fixed;
    if (m - t > 0) fixed.emplace_back(u, m - t);
    if (t > 0) fixed.emplace_back(v, t);
    Scalar polar = derived_poly(P, fixed, 0).constant_value();
    coeffs.push_back(binomial_scalar(P.field(), m, t) * polar);
  }
  SliceReport rep;
  rep.u = u;
  rep.v = v;
  rep.slice = UniPoly(P.field(), std::move(coeffs));
  return rep;
}

namespace {

// Canonical form (a + bi)/n with integral a, b, positive n, gcd 1.
struct RootKey {
  mpz_class norm_num; // a^2 + b^2
  mpz_class den;      // n
};

RootKey root_key(const Scalar& r) {
  const Rat& re = r.re();
  const Rat& im = r.im();
  mpz_class n;
  mpz_lcm(n.get_mpz_t(), re.get_den().get_mpz_t(), im.get_den().get_mpz_t());
  mpz_class a = re.get_num() * (n / re.get_den());
  mpz_class b = im.get_num() * (n / im.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  if (g != 0) { a /= g; b /= g; n /= g; }
  return {a * a + b * b, n};
}

} // namespace

Scalar pick_exact_root(const std::vector<Scalar>& roots) {
  if (roots.empty()) raise(Errc::Internal, "pick_exact_root with no candidates");
  const Scalar* best = &roots.front();
  RootKey best_key = root_key(*best);
  for (std::size_t i = 1; i < roots.size(); ++i) {
    RootKey key = root_key(roots[i]);
    int c = cmp(key.norm_num, best_key.norm_num);
    if (c == 0) c = cmp(key.den, best_key.den);
    bool better = c < 0;
    if (c == 0) better = Scalar::exact_less(*best, roots[i]); // prefer larger (re, im)
    if (better) { best = &roots[i]; best_key = key; }
  }
  return *best;
}

namespace {

std::vector<Scalar> nonzero_roots(std::vector<Scalar> roots) {
  std::vector<Scalar> out;
  for (auto& r : roots)
    if (!r.is_zero()) out.push_back(std::move(r));
  return out;
}

Scalar pick_approx_root(const std::vector<Scalar>& roots) {
  const Scalar* best = &roots.front();
  for (std::size_t i = 1; i < roots.size(); ++i) {
    double da = std::norm(roots[i].approx());
    double db = std::norm(best->approx());
    if (da < db) { best = &roots[i]; continue; }
    if (da == db) {
      auto a = roots[i].approx(), b = best->approx();
      if (a.real() > b.real() ||
          (a.real() == b.real() && a.imag() > b.imag()))
        best = &roots[i];
    }
  }
  return *best;
}

// Exact backends keep exact arithmetic downstream: the approximate root is
// snapped to the Gaussian rational given by its double representation and
// the (exactly evaluated) residual is checked against the tolerance.
Scalar snap_root(const Scalar& approx_root, Field field) {
  if (field == Field::Complex64) return approx_root;
  std::complex<double> z = approx_root.approx();
  Rat re(z.real());
  Rat im(z.imag());
  re.canonicalize();
  im.canonicalize();
  if (field == Field::Rational) return Scalar::rational(re);
  return Scalar::gaussian(re, im);
}

ZeroWitness approx_fallback(const HomPoly& P, const SliceReport& first,
                            const ZeroFindOptions& opts) {
  std::vector<Scalar> roots;
  try {
    roots = find_approx_roots(first.slice, opts.tolerance, opts.root_limits);
  } catch (const EngineError& e) {
    if (e.code() == Errc::NoConvergence)
      raise(Errc::BudgetExhausted,
            "no exact slice root within budget and the approximate fallback "
            "did not converge");
    throw;
  }
  Scalar t_approx = pick_approx_root(roots);
  Scalar t = snap_root(t_approx, P.field());
  Scalar residual = first.slice.evaluate(t);
  double bound = opts.tolerance.epsilon * first.slice.root_scale(t.approx());
  if (residual.abs() > bound)
    raise(Errc::BudgetExhausted, "snapped approximate root violates the residual bound");
  ZeroWitness w;
  w.kind = ZeroWitness::Kind::Slice;
  w.vector = first.u.plus(first.v.scaled(t));
  w.exact = false;
  w.slice = first;
  w.slice->root = t;
  w.slice->exact = false;
  return w;
}

ZeroWitness direct_witness(SparseVector y) {
  ZeroWitness w;
  w.kind = ZeroWitness::Kind::Direct;
  w.vector = std::move(y);
  w.exact = true;
  return w;
}

} // namespace

ZeroWitness find_zero_complex(const HomPoly& P, Subspace& S,
                              const ZeroFindOptions& opts) {
  if (P.field() == Field::Rational)
    raise(Errc::RealFieldRejected,
          "find_zero_complex requires the gaussian_rational or complex64 backend");
  require_same_field(P.field(), S.field(), "find_zero_complex");

  std::optional<SliceReport> first;
  const bool exact_field = field_is_exact(P.field());
  for (int attempt = 0; attempt < std::max(1, opts.retry_budget); ++attempt) {
    SparseVector u = S.next();
    if (evaluate(P, u).is_zero()) return direct_witness(std::move(u));
    SparseVector v = S.next();
    if (evaluate(P, v).is_zero()) return direct_witness(std::move(v));
    SliceReport rep = binary_slice(P, u, v);
    if (rep.slice.is_zero()) return direct_witness(std::move(u));
    if (exact_field) {
      auto roots = nonzero_roots(find_exact_roots(rep.slice, opts.root_limits));
      if (!roots.empty()) {
        Scalar t = pick_exact_root(roots);
        ZeroWitness w;
        w.kind = ZeroWitness::Kind::Slice;
        w.vector = u.plus(v.scaled(t));
        w.exact = true;
        rep.root = t;
        rep.exact = true;
        w.slice = std::move(rep);
        return w;
      }
    }
    if (!first) first = std::move(rep);
  }
  return approx_fallback(P, *first, opts);
}

ZeroWitness find_zero_finite_type(const FiniteTypePoly& F, const Subspace& S) {
  Subspace Z = kernel_within(S.clone(), F.functionals(), "finite_type");
  ZeroWitness w;
  w.kind = ZeroWitness::Kind::Kernel;
  w.vector = Z.next();
  w.exact = field_is_exact(F.field());
  return w;
}

namespace {

struct RealScan {
  std::optional<ZeroWitness> witness;
  std::vector<SliceProbe> slices;
};

RealScan scan_real_slices(const HomPoly& P, Subspace& S, int pairs,
                          const RootSearchLimits& limits) {
  RealScan out;
  for (int i = 0; i < std::max(1, pairs); ++i) {
    SparseVector u = S.next();
    if (evaluate(P, u).is_zero()) { out.witness = direct_witness(std::move(u)); return out; }
    SparseVector v = S.next();
    if (evaluate(P, v).is_zero()) { out.witness = direct_witness(std::move(v)); return out; }
    SliceReport rep = binary_slice(P, u, v);
    if (rep.slice.is_zero()) { out.witness = direct_witness(std::move(u)); return out; }
    auto roots = nonzero_roots(find_exact_roots(rep.slice, limits));
    if (!roots.empty()) {
      Scalar t = pick_exact_root(roots);
      ZeroWitness w;
      w.kind = ZeroWitness::Kind::Slice;
      w.vector = u.plus(v.scaled(t));
      w.exact = true;
      rep.root = t;
      w.slice = std::move(rep);
      out.witness = std::move(w);
      return out;
    }
    SliceProbe probe;
    probe.u = rep.u;
    probe.v = rep.v;
    probe.slice = rep.slice;
    if (rep.slice.degree() == 2) {
      Scalar disc = rep.slice.coeff(1) * rep.slice.coeff(1) -
                    Scalar::integer(P.field(), 4) * rep.slice.coeff(2) * rep.slice.coeff(0);
      probe.discriminant = disc.re();
      probe.no_real_root_certified = disc.re() < 0;
    }
    out.slices.push_back(std::move(probe));
  }
  return out;
}

std::string slices_detail(const std::vector<SliceProbe>& slices) {
  std::ostringstream os;
  os << "{\"diagnosis\":\"NoRealRootOnProbedSlices\",\"slices_probed\":"
     << slices.size() << ",\"certified_no_real_root\":";
  std::size_t certified = 0;
  for (const auto& s : slices)
    if (s.no_real_root_certified) ++certified;
  os << certified << "}";
  return os.str();
}

} // namespace

ZeroWitness find_zero_real(const HomPoly& P, Subspace& S,
                           const ZeroFindOptions& opts) {
  if (P.field() != Field::Rational)
    raise(Errc::BackendMismatch, "find_zero_real requires the rational backend");
  RealScan scan = scan_real_slices(P, S, opts.retry_budget, opts.root_limits);
  if (scan.witness) return std::move(*scan.witness);
  raise(Errc::NoRealZero, "no exact real root on any probed slice",
        slices_detail(scan.slices));
}

ProbeReport probe_real_definite(const HomPoly& P, Subspace& S, int pairs,
                                const RootSearchLimits& limits) {
  if (P.field() != Field::Rational)
    raise(Errc::BackendMismatch, "probe_real_definite requires the rational backend");
  if (P.degree() % 2 != 0)
    raise(Errc::InvalidInput, "probe_real_definite expects an even degree");
  RealScan scan = scan_real_slices(P, S, pairs, limits);
  ProbeReport rep;
  if (scan.witness) {
    rep.kind = ProbeReport::Kind::RootFound;
    rep.witness = scan.witness->vector;
  } else {
    rep.kind = ProbeReport::Kind::NoRealRootOnProbedSlices;
    rep.slices = std::move(scan.slices);
  }
  return rep;
}

} // namespace zerospan
