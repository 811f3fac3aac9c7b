#include "einsnil/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace einsnil {

Scalar::Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 1) throw std::invalid_argument("Scalar: field tag d must be >= 1");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  } else if (b_ == 0) {
    d_ = 1;
  }
  a_.canonicalize();
  b_.canonicalize();
}

const Rational& Scalar::rat() const {
  if (!is_rational()) throw std::logic_error("Scalar::rat: value has a sqrt part");
  return a_;
}

long Scalar::join_fields(const Scalar& x, const Scalar& y) {
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1 || y.d_ == x.d_) return x.d_;
  throw std::logic_error("Scalar: mixing elements of distinct quadratic fields");
}

int Scalar::sign() const {
  if (b_ == 0) return sgn(a_);
  if (a_ == 0) return sgn(b_);
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d), compared via a^2 vs b^2 d.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;  // impossible for square-free d > 1, kept for safety
  return lhs > rhs ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join_fields(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = join_fields(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = join_fields(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = (b_ == 0) ? 1 : d;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  Rational norm = a_ * a_ - b_ * b_ * d_;
  // norm == 0 would force a = b = 0 for square-free d.
  return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << a_;
  if (b_ != 0) {
    Rational r = b_;
    if (r < 0) {
      os << '-';
      r = -r;
    } else {
      os << '+';
    }
    os << r << "*sqrt";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace

Scalar parse_scalar(const std::string& text, long d) {
  // Grammar: RAT | RAT ('+'|'-') RAT '*sqrt'.  The leading rational may itself
  // carry a sign, so scan for the separator after position 0.
  const std::string suffix = "*sqrt";
  auto star = text.rfind(suffix);
  if (star == std::string::npos) return Scalar(parse_rational(text));
  if (star + suffix.size() != text.size())
    throw std::invalid_argument("bad scalar literal '" + text + "'");
  std::string head = text.substr(0, star);
  size_t sep = std::string::npos;
  for (size_t pos = 1; pos < head.size(); ++pos) {
    if ((head[pos] == '+' || head[pos] == '-') && head[pos - 1] != '+' && head[pos - 1] != '-')
      sep = pos;  // last top-level sign separates the sqrt coefficient
  }
  Rational a = 0, b;
  if (sep == std::string::npos) {
    b = parse_rational(head);
  } else {
    a = parse_rational(head.substr(0, sep));
    b = parse_rational(head.substr(sep + 1));
    if (head[sep] == '-') b = -b;
  }
  if (d == 1) throw std::invalid_argument("sqrt coefficient given but the field is rational");
  return Scalar(std::move(a), std::move(b), d);
}

}  // namespace einsnil
