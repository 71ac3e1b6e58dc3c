#ifndef ZEROSPAN_SCALAR_HPP
#define ZEROSPAN_SCALAR_HPP

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "zerospan/field.hpp"

namespace zerospan {

using Rat = mpq_class;

// Builds a canonical rational (reduced, positive denominator).
Rat make_rat(const mpz_class& num, const mpz_class& den);
Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& q); // always "num/den"

// A field element over one of the three backends. Exact backends hold the
// value as a pair of reduced fractions (imaginary part identically zero on
// the rational backend); Complex64 holds a double pair. Immutable in spirit:
// all operations return new values.
class Scalar {
public:
  Scalar() : field_(Field::Rational) {}
  explicit Scalar(Field f) : field_(f) {}

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f);
  static Scalar rational(Rat q);
  static Scalar gaussian(Rat re, Rat im);
  static Scalar exact(Field f, Rat re, Rat im);
  static Scalar complex64(std::complex<double> z);
  static Scalar integer(Field f, long n);

  Field field() const { return field_; }
  bool is_exact() const { return field_is_exact(field_); }
  bool is_zero() const;
  bool is_real() const;

  // Exact payload accessors; BackendMismatch on the approximate backend.
  const Rat& re() const;
  const Rat& im() const;
  std::complex<double> approx() const; // value as complex double, any backend

  Scalar conj() const;
  Scalar inverse() const; // ZeroPolynomial-free: raises on zero
  Scalar negate() const;
  // |z|^2; exact backends return it as an exact rational scalar.
  Rat norm2_exact() const;
  double abs() const;

  // Re-tags an exact value onto another backend. Rational -> Gaussian is an
  // embedding; Gaussian -> Rational requires a vanishing imaginary part;
  // exact -> Complex64 rounds.
  Scalar to_field(Field target) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order on exact values (by real, then imaginary part); used for
  // deterministic root listings and dedup sets.
  static bool exact_less(const Scalar& a, const Scalar& b);

  std::string to_string() const;

private:
  Field field_;
  Rat re_, im_;
  std::complex<double> ap_{0.0, 0.0};
};

// Exact square root within the backend field, when it exists. On the
// rational backend only nonnegative perfect squares have roots; on the
// Gaussian backend the real-pair reduction decides. BackendMismatch on
// Complex64 input.
std::optional<Scalar> exact_sqrt(const Scalar& q);

// sqrt of a nonnegative rational when it is a square in Q.
std::optional<Rat> rat_sqrt(const Rat& q);

Scalar binomial_scalar(Field f, unsigned n, unsigned k);

} // namespace zerospan

#endif
