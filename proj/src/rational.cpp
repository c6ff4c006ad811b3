#include "nakayama/rational.hpp"

#include <ostream>

namespace nakayama {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den == 0) throw Error(Errc::internal_inconsistency, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked::sub(0, num_);
    den_ = checked::sub(0, den_);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) {
    throw Error(Errc::internal_inconsistency, "expected an integer, got " + to_string());
  }
  return num_;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::sub(0, num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::add(num_, o.num_);
    return *this;
  }
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t lhs = checked::mul(num_, o.den_ / g);
  const std::int64_t rhs = checked::mul(o.num_, den_ / g);
  num_ = checked::add(lhs, rhs);
  den_ = checked::mul(den_, o.den_ / g);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::mul(num_, o.num_);
    return *this;
  }
  // Cross-cancel first to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const std::int64_t n1 = g1 ? num_ / g1 : num_;
  const std::int64_t d2 = g1 ? o.den_ / g1 : o.den_;
  const std::int64_t n2 = g2 ? o.num_ / g2 : o.num_;
  const std::int64_t d1 = g2 ? den_ / g2 : den_;
  num_ = checked::mul(n1, n2);
  den_ = checked::mul(d1, d2);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(Errc::internal_inconsistency, "division by zero");
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace nakayama
