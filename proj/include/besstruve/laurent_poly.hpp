#pragma once

#include "besstruve/rational.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace besstruve {

/// Value of a polynomial at a point together with the sum of the magnitudes
/// of its monomials there (the cancellation denominator).
struct PolyValue {
  double value = 0.0;
  double abs_sum = 0.0;
};

class CompiledPoly;

/// Finite sum of c_e z^e (e may be negative) with exact rational
/// coefficients, times pi^pi_power where pi_power is 0 or -1.
///
/// Zero coefficients are never stored; the zero polynomial has no terms and
/// adopts the pi power of whatever it is combined with.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational, std::greater<>>;

  LaurentPoly() = default;
  explicit LaurentPoly(int pi_power);

  static LaurentPoly constant(const Rational& c, int pi_power = 0);
  static LaurentPoly monomial(const Rational& c, int exponent, int pi_power = 0);

  int pi_power() const { return pi_power_; }
  /// Terms keyed by exponent, descending.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  int max_exponent() const;
  int min_exponent() const;

  void add_term(int exponent, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return a * Rational(-1); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by z^shift.
  LaurentPoly shifted(int shift) const;
  /// Multiplies by (c z)^n, i.e. rescales every coefficient c_e by c^n and
  /// shifts by n.
  LaurentPoly times_power(const Rational& c, int n) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Double-precision evaluation including the pi factor.
  double operator()(double z) const;
  CompiledPoly compile() const;

  /// {"pi_power": p, "terms": [{"exp": e, "num": "...", "den": "..."}, ...]}
  nlohmann::ordered_json to_json() const;
  static LaurentPoly from_json(const nlohmann::ordered_json& j);
  /// Human-readable form such as "24/z^2 - 1" or "(2/3 z)/pi".
  std::string to_string() const;

 private:
  void adopt_pi_power(const LaurentPoly& o);

  TermMap terms_;
  int pi_power_ = 0;
};

/// Dense double-precision image of a LaurentPoly for repeated evaluation.
///
/// The nonnegative part is evaluated by Horner in z, the negative part by
/// Horner in 1/z.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(int min_exponent, std::vector<double> coeffs);

  PolyValue evaluate(double z) const;
  std::size_t size() const { return coeffs_.size(); }

 private:
  int min_exp_ = 0;
  std::vector<double> coeffs_;  // coeffs_[i] multiplies z^(min_exp_ + i)
};

}  // namespace besstruve
