#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace besstruve {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  static Rational from_strings(const std::string& num, const std::string& den);

  const mpq_class& mpq() const { return q_; }

  std::string numerator_string() const { return q_.get_num().get_str(10); }
  std::string denominator_string() const { return q_.get_den().get_str(10); }
  std::string to_string() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  double to_double() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

/// Integer power, negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, int exponent);

/// 2^e for any integer e.
Rational pow2(int exponent);

/// n! for n >= 0; throws DomainError for negative n.
Rational factorial(int n);

/// 1/n!, with the reciprocal-gamma convention 1/n! = 0 for negative n.
Rational reciprocal_factorial(int n);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), n >= 0.
Rational pochhammer(const Rational& a, int n);

}  // namespace besstruve
