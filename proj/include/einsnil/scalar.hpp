#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace einsnil {

using Rational = mpq_class;

/// Element of Q or of a real quadratic field Q(sqrt(d)), stored as a + b*sqrt(d)
/// with d a square-free positive integer. d == 1 marks a plain rational (b is
/// forced to zero). All arithmetic and sign decisions are exact.
class Scalar {
 public:
  Scalar() : d_(1) {}
  Scalar(long v) : a_(v), d_(1) {}          // NOLINT: implicit by design
  Scalar(Rational a) : a_(std::move(a)), d_(1) {}
  Scalar(Rational a, Rational b, long d);

  static Scalar sqrt_of(long d) { return Scalar(0, 1, d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  /// The rational value; valid only when is_rational().
  const Rational& rat() const;

  /// Exact sign of a + b*sqrt(d): -1, 0 or +1.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  double to_double() const;

  /// Canonical text form: "p/q", "p/q+r/s*sqrt" or "p/q-r/s*sqrt".
  std::string str() const;

 private:
  // Field of the result when combining two scalars; mixing two distinct
  // irrational fields is a usage error.
  static long join_fields(const Scalar& x, const Scalar& y);

  Rational a_, b_;
  long d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the canonical scalar form. `d` supplies the field of the sqrt term;
/// input with a sqrt part while d == 1 is rejected.
Scalar parse_scalar(const std::string& text, long d);

}  // namespace einsnil
