#include "besstruve/rational.hpp"

#include "besstruve/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace besstruve {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw DomainError("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpq_class q;
  try {
    q.get_num().set_str(num, 10);
    q.get_den().set_str(den, 10);
  } catch (const std::invalid_argument&) {
    throw DomainError("Rational: malformed integer string");
  }
  return Rational(std::move(q));
}

std::string Rational::to_string() const { return q_.get_str(10); }

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; pick the nearer of the two neighbours.
  const double truncated = q_.get_d();
  if (!std::isfinite(truncated) || sgn(q_) == 0) return truncated;
  const double away = std::nextafter(
      truncated, sgn(q_) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return truncated;
  const mpq_class err_trunc = ::abs(q_ - mpq_class(truncated));
  const mpq_class err_away = ::abs(q_ - mpq_class(away));
  return err_away < err_trunc ? away : truncated;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("pow: zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational pow2(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
}

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational reciprocal_factorial(int n) {
  if (n < 0) return Rational(0);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(mpz_class(1), f));
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative length");
  Rational result(1);
  for (int i = 0; i < n; ++i) result *= a + Rational(i);
  return result;
}

}  // namespace besstruve
