#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "zerospan/unipoly.hpp"

namespace zerospan {

namespace {

struct GaussInt {
  mpz_class re, im;
};

mpz_class gauss_norm(const GaussInt& g) { return g.re * g.re + g.im * g.im; }

bool divides_gauss(const GaussInt& d, const GaussInt& g) {
  // d | g in Z[i] iff g * conj(d) is divisible by N(d) componentwise.
  mpz_class n = gauss_norm(d);
  if (n == 0) return false;
  mpz_class re = g.re * d.re + g.im * d.im;
  mpz_class im = g.im * d.re - g.re * d.im;
  return mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t());
}

// Positive integer divisors of n with d <= bound; capped enumeration.
std::vector<mpz_class> integer_divisors(const mpz_class& n_in,
                                        unsigned long bound) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  mpz_class cap = std::min(mpz_class(bound), root);
  for (mpz_class t = 1; t <= cap; ++t) {
    if (!mpz_divisible_p(n.get_mpz_t(), t.get_mpz_t())) continue;
    out.push_back(t);
    mpz_class q = n / t;
    if (q != t && q <= bound) out.push_back(q);
    if (out.size() > 4096) break; // keep pathological inputs bounded
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First-quadrant Gaussian-integer divisors of g with norm <= bound.
std::vector<GaussInt> gaussian_divisors(const GaussInt& g,
                                        unsigned long bound) {
  std::vector<GaussInt> out;
  mpz_class n = gauss_norm(g);
  for (const mpz_class& d : integer_divisors(n, bound)) {
    mpz_class x = 0;
    while (x * x * 2 <= d) {
      mpz_class y2 = d - x * x;
      if (mpz_perfect_square_p(y2.get_mpz_t())) {
        mpz_class y;
        mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
        GaussInt a{x, y};
        GaussInt b{y, x};
        if (divides_gauss(a, g)) out.push_back(a);
        if ((y != x) && divides_gauss(b, g)) out.push_back(b);
      }
      ++x;
    }
  }
  return out;
}

// Clears denominators; returns coefficients as Gaussian integers.
std::vector<GaussInt> to_integer_coeffs(const UniPoly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den().get_mpz_t());
  }
  std::vector<GaussInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Rat re = c.re() * lcm;
    Rat im = c.im() * lcm;
    out.push_back(GaussInt{re.get_num(), im.get_num()});
  }
  return out;
}

using RootSet = std::set<Scalar, bool (*)(const Scalar&, const Scalar&)>;

void find_exact_impl(const UniPoly& p, const RootSearchLimits& limits,
                     RootSet& roots);

// Degree >= 3: bounded rational-root-style search over the backend field.
void candidate_search(const UniPoly& p, const RootSearchLimits& limits,
                      RootSet& roots) {
  auto ints = to_integer_coeffs(p);
  const GaussInt& c0 = ints.front();
  const GaussInt& cd = ints.back();
  const bool gaussian = p.field() == Field::GaussianRational;

  std::vector<GaussInt> nums, dens;
  if (gaussian) {
    nums = gaussian_divisors(c0, limits.divisor_bound);
    dens = gaussian_divisors(cd, limits.divisor_bound);
  } else {
    for (const mpz_class& d : integer_divisors(c0.re, limits.divisor_bound))
      nums.push_back(GaussInt{d, 0});
    for (const mpz_class& d : integer_divisors(cd.re, limits.divisor_bound))
      dens.push_back(GaussInt{d, 0});
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& u : nums) {
    for (const auto& v : dens) {
      Scalar base =
          gaussian
              ? Scalar::gaussian(Rat(u.re), Rat(u.im)) /
                    Scalar::gaussian(Rat(v.re), Rat(v.im))
              : Scalar::rational(make_rat(u.re, v.re));
      const int units = gaussian ? 4 : 2;
      Scalar cand = base;
      const Scalar unit_i =
          gaussian ? Scalar::gaussian(0, 1)
                   : Scalar::rational(Rat(-1)); // units: {1,i,-1,-i} or {1,-1}
      for (int w = 0; w < units; ++w) {
        if (!seen.insert({rat_to_string(cand.re()), rat_to_string(cand.im())})
                 .second) {
          cand = cand * unit_i;
          continue;
        }
        if (p.evaluate(cand).is_zero()) {
          roots.insert(cand);
          find_exact_impl(p.deflate(cand), limits, roots);
          return;
        }
        cand = cand * unit_i;
      }
    }
  }
}

void find_exact_impl(const UniPoly& p, const RootSearchLimits& limits,
                     RootSet& roots) {
  const int d = p.degree();
  if (d <= 0) return;
  if (d == 1) {
    roots.insert(p.coeff(0).negate() / p.coeff(1));
    return;
  }
  if (d == 2) {
    const Scalar &a = p.coeff(2), &b = p.coeff(1), &c = p.coeff(0);
    Scalar four = Scalar::integer(p.field(), 4);
    Scalar two = Scalar::integer(p.field(), 2);
    Scalar disc = b * b - four * a * c;
    auto s = exact_sqrt(disc);
    if (!s) return; // no root in the field: the formula is complete here
    roots.insert((b.negate() + *s) / (two * a));
    roots.insert((b.negate() - *s) / (two * a));
    return;
  }
  candidate_search(p, limits, roots);
}

} // namespace

std::vector<Scalar> find_exact_roots(const UniPoly& p,
                                     const RootSearchLimits& limits) {
  if (p.is_zero())
    raise(Errc::ZeroPolynomial, "find_exact_roots on the zero polynomial");
  if (!field_is_exact(p.field()))
    raise(Errc::BackendMismatch, "find_exact_roots on approximate backend");

  RootSet roots(&Scalar::exact_less);
  UniPoly work = p;
  // Strip the t^k factor: zero is then a root.
  std::size_t low = 0;
  while (low < work.coefficients().size() && work.coeff(low).is_zero()) ++low;
  if (low > 0) {
    roots.insert(Scalar::zero(p.field()));
    std::vector<Scalar> rest(work.coefficients().begin() + long(low),
                             work.coefficients().end());
    work = UniPoly(p.field(), std::move(rest));
  }
  find_exact_impl(work, limits, roots);
  return {roots.begin(), roots.end()};
}

std::vector<Scalar> find_approx_roots(const UniPoly& p, const Tolerance& tol,
                                      const RootSearchLimits& limits) {
  if (p.is_zero())
    raise(Errc::ZeroPolynomial, "find_approx_roots on the zero polynomial");
  if (p.degree() == 0)
    raise(Errc::ZeroDegree, "find_approx_roots on a nonzero constant");
  if (tol.is_exact())
    raise(Errc::InvalidInput, "find_approx_roots needs a positive tolerance");

  const int d = p.degree();
  std::vector<std::complex<double>> c(std::size_t(d) + 1);
  for (int i = 0; i <= d; ++i) c[std::size_t(i)] = p.coeff(std::size_t(i)).approx();
  // Monic normalization stabilizes the correction terms.
  for (int i = 0; i <= d; ++i) c[std::size_t(i)] /= c[std::size_t(d)];
  auto eval_monic = [&](std::complex<double> t) {
    std::complex<double> acc{0, 0};
    for (int i = d; i >= 0; --i) acc = acc * t + c[std::size_t(i)];
    return acc;
  };

  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  const std::complex<double> seed{0.4, 0.9};
  std::complex<double> pw{1.0, 0.0};
  for (auto& zj : z) {
    zj = pw;
    pw *= seed;
  }

  auto residuals_ok = [&]() {
    for (const auto& zj : z)
      if (std::abs(p.evaluate(zj)) > tol.epsilon * p.root_scale(zj))
        return false;
    return true;
  };

  for (int sweep = 0; sweep < limits.iteration_budget; ++sweep) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      std::complex<double> denom{1.0, 0.0};
      for (std::size_t i = 0; i < z.size(); ++i)
        if (i != j) denom *= z[j] - z[i];
      if (denom == std::complex<double>(0.0, 0.0)) {
        z[j] += std::complex<double>(1e-8 * double(j + 1), 1e-8);
        continue;
      }
      z[j] -= eval_monic(z[j]) / denom;
    }
    if (residuals_ok()) {
      std::vector<Scalar> out;
      out.reserve(z.size());
      for (const auto& zj : z) out.push_back(Scalar::complex64(zj));
      return out;
    }
  }
  raise(Errc::NoConvergence, "simultaneous iteration did not meet the residual bound");
}

} // namespace zerospan
