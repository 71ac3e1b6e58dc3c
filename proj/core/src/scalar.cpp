#include "zerospan/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace zerospan {

const char* errc_name(Errc c) {
  switch (c) {
  case Errc::FieldMismatch: return "FieldMismatch";
  case Errc::BackendMismatch: return "BackendMismatch";
  case Errc::ArityMismatch: return "ArityMismatch";
  case Errc::ZeroPolynomial: return "ZeroPolynomial";
  case Errc::ZeroDegree: return "ZeroDegree";
  case Errc::ZeroVector: return "ZeroVector";
  case Errc::EmptyBasis: return "EmptyBasis";
  case Errc::NoConvergence: return "NoConvergence";
  case Errc::StreamExhausted: return "StreamExhausted";
  case Errc::DependentSeed: return "DependentSeed";
  case Errc::SeedNotInZeroSet: return "SeedNotInZeroSet";
  case Errc::PointNotAZero: return "PointNotAZero";
  case Errc::NoRealZero: return "NoRealZero";
  case Errc::RealFieldRejected: return "RealFieldRejected";
  case Errc::BudgetExhausted: return "BudgetExhausted";
  case Errc::DepthExceeded: return "DepthExceeded";
  case Errc::UnknownKind: return "UnknownKind";
  case Errc::InvalidInput: return "InvalidInput";
  case Errc::ParseError: return "ParseError";
  case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool errc_is_mathematical(Errc c) {
  switch (c) {
  case Errc::NoRealZero:
  case Errc::BudgetExhausted:
  case Errc::NoConvergence:
  case Errc::StreamExhausted:
  case Errc::DepthExceeded:
    return true;
  default:
    return false;
  }
}

Field field_from_name(const std::string& name) {
  if (name == "rational") return Field::Rational;
  if (name == "gaussian_rational") return Field::GaussianRational;
  if (name == "complex64") return Field::Complex64;
  raise(Errc::ParseError, "unknown field name '" + name + "'");
}

Rat make_rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) raise(Errc::InvalidInput, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rat(mpz_class(text), 1);
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    raise(Errc::ParseError, "malformed rational '" + text + "'");
  }
}

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::one(Field f) { return integer(f, 1); }

Scalar Scalar::rational(Rat q) {
  Scalar s(Field::Rational);
  s.re_ = std::move(q);
  return s;
}

Scalar Scalar::gaussian(Rat re, Rat im) {
  Scalar s(Field::GaussianRational);
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::exact(Field f, Rat re, Rat im) {
  if (!field_is_exact(f))
    raise(Errc::BackendMismatch, "Scalar::exact on approximate backend");
  if (f == Field::Rational && im != 0)
    raise(Errc::BackendMismatch, "rational backend with nonzero imaginary part");
  Scalar s(f);
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::complex64(std::complex<double> z) {
  Scalar s(Field::Complex64);
  s.ap_ = z;
  return s;
}

Scalar Scalar::integer(Field f, long n) {
  if (f == Field::Complex64) return complex64({double(n), 0.0});
  Scalar s(f);
  s.re_ = Rat(n);
  return s;
}

bool Scalar::is_zero() const {
  if (field_ == Field::Complex64) return ap_ == std::complex<double>(0.0, 0.0);
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_real() const {
  if (field_ == Field::Complex64) return ap_.imag() == 0.0;
  return im_ == 0;
}

const Rat& Scalar::re() const {
  if (!is_exact()) raise(Errc::BackendMismatch, "re() on approximate scalar");
  return re_;
}

const Rat& Scalar::im() const {
  if (!is_exact()) raise(Errc::BackendMismatch, "im() on approximate scalar");
  return im_;
}

std::complex<double> Scalar::approx() const {
  if (field_ == Field::Complex64) return ap_;
  return {re_.get_d(), im_.get_d()};
}

Scalar Scalar::conj() const {
  if (field_ == Field::Complex64) return complex64(std::conj(ap_));
  Scalar s(field_);
  s.re_ = re_;
  s.im_ = -im_;
  return s;
}

Scalar Scalar::negate() const {
  if (field_ == Field::Complex64) return complex64(-ap_);
  Scalar s(field_);
  s.re_ = -re_;
  s.im_ = -im_;
  return s;
}

Rat Scalar::norm2_exact() const {
  if (!is_exact()) raise(Errc::BackendMismatch, "norm2_exact on approximate scalar");
  return re_ * re_ + im_ * im_;
}

double Scalar::abs() const { return std::abs(approx()); }

Scalar Scalar::to_field(Field target) const {
  if (target == field_) return *this;
  if (target == Field::Complex64) return complex64(approx());
  if (!is_exact())
    raise(Errc::BackendMismatch, "cannot promote approximate scalar to exact field");
  if (target == Field::Rational && im_ != 0)
    raise(Errc::BackendMismatch, "gaussian value with nonzero imaginary part is not rational");
  return exact(target, re_, im_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_, "Scalar::+");
  if (a.field_ == Field::Complex64) return Scalar::complex64(a.ap_ + b.ap_);
  Scalar s(a.field_);
  s.re_ = a.re_ + b.re_;
  s.im_ = a.im_ + b.im_;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_, "Scalar::-");
  if (a.field_ == Field::Complex64) return Scalar::complex64(a.ap_ - b.ap_);
  Scalar s(a.field_);
  s.re_ = a.re_ - b.re_;
  s.im_ = a.im_ - b.im_;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_, "Scalar::*");
  if (a.field_ == Field::Complex64) return Scalar::complex64(a.ap_ * b.ap_);
  Scalar s(a.field_);
  s.re_ = a.re_ * b.re_ - a.im_ * b.im_;
  s.im_ = a.re_ * b.im_ + a.im_ * b.re_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(Errc::InvalidInput, "inverse of zero scalar");
  if (field_ == Field::Complex64) return complex64(1.0 / ap_);
  Rat n = norm2_exact();
  Scalar s(field_);
  s.re_ = re_ / n;
  s.im_ = -im_ / n;
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_ == Field::Complex64) return ap_ == o.ap_;
  return re_ == o.re_ && im_ == o.im_;
}

bool Scalar::exact_less(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0;
  return cmp(a.im_, b.im_) < 0;
}

std::string Scalar::to_string() const {
  if (field_ == Field::Complex64) {
    return "(" + std::to_string(ap_.real()) + ", " + std::to_string(ap_.imag()) + ")";
  }
  if (im_ == 0) return rat_to_string(re_);
  return rat_to_string(re_) + " + " + rat_to_string(im_) + "i";
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rat(rn, rd);
}

std::optional<Scalar> exact_sqrt(const Scalar& q) {
  if (!q.is_exact())
    raise(Errc::BackendMismatch, "exact_sqrt on approximate backend");
  const Rat& a = q.re();
  const Rat& b = q.im();
  if (b == 0) {
    if (a >= 0) {
      auto r = rat_sqrt(a);
      if (!r) return std::nullopt;
      return Scalar::exact(q.field(), *r, 0);
    }
    if (q.field() != Field::GaussianRational) return std::nullopt;
    auto r = rat_sqrt(Rat(-a));
    if (!r) return std::nullopt;
    return Scalar::gaussian(0, *r);
  }
  // b != 0 forces the Gaussian backend. Solve (c+di)^2 = a+bi via
  // c^2 = (a + |q|)/2, d = b/(2c); a root exists in Q(i) iff both square
  // roots land in Q.
  auto s = rat_sqrt(a * a + b * b);
  if (!s) return std::nullopt;
  auto c = rat_sqrt((a + *s) / 2);
  if (!c || *c == 0) return std::nullopt;
  Rat d = b / (2 * (*c));
  Scalar r = Scalar::gaussian(*c, d);
  if (!(r * r == q)) return std::nullopt; // unreachable; cheap sanity
  return r;
}

Scalar binomial_scalar(Field f, unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (f == Field::Complex64) return Scalar::complex64({b.get_d(), 0.0});
  return Scalar::exact(f, Rat(b), 0);
}

} // namespace zerospan
