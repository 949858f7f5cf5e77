#include "besstruve/laurent_poly.hpp"

#include "besstruve/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace besstruve {

namespace {

void check_pi_power(int p) {
  if (p != 0 && p != -1) throw std::logic_error("LaurentPoly: pi power must be 0 or -1");
}

}  // namespace

LaurentPoly::LaurentPoly(int pi_power) : pi_power_(pi_power) { check_pi_power(pi_power); }

LaurentPoly LaurentPoly::constant(const Rational& c, int pi_power) {
  return monomial(c, 0, pi_power);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent, int pi_power) {
  LaurentPoly p(pi_power);
  p.add_term(exponent, c);
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no degree");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::adopt_pi_power(const LaurentPoly& o) {
  if (o.is_zero()) return;
  if (is_zero()) {
    pi_power_ = o.pi_power_;
    return;
  }
  if (pi_power_ != o.pi_power_) {
    throw std::logic_error("LaurentPoly: adding polynomials with different pi powers");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt_pi_power(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  adopt_pi_power(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r(a.pi_power_ + b.pi_power_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r(pi_power_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

LaurentPoly LaurentPoly::times_power(const Rational& c, int n) const {
  return shifted(n) * pow(c, n);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.pi_power_ == b.pi_power_ && a.terms_ == b.terms_;
}

double LaurentPoly::operator()(double z) const { return compile().evaluate(z).value; }

CompiledPoly LaurentPoly::compile() const {
  if (terms_.empty()) return {};
  const int lo = min_exponent();
  const int hi = max_exponent();
  std::vector<double> dense(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [e, c] : terms_) {
    double v = c.to_double();
    if (pi_power_ == -1) v /= std::numbers::pi;
    dense[static_cast<std::size_t>(e - lo)] = v;
  }
  return CompiledPoly(lo, std::move(dense));
}

nlohmann::ordered_json LaurentPoly::to_json() const {
  nlohmann::ordered_json j;
  j["pi_power"] = pi_power_;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["num"] = c.numerator_string();
    t["den"] = c.denominator_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::ordered_json& j) {
  LaurentPoly p(j.at("pi_power").get<int>());
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at("exp").get<int>(),
               Rational::from_strings(t.at("num").get<std::string>(),
                                      t.at("den").get<std::string>()));
  }
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
    } else if (e > 0) {
      if (!(mag == Rational(1))) os << mag << " ";
      os << "z";
      if (e != 1) os << "^" << e;
    } else {
      os << mag.mpq().get_num().get_str() << "/";
      if (!(mag.mpq().get_den() == 1)) os << "(" << mag.mpq().get_den().get_str() << " ";
      os << "z";
      if (e != -1) os << "^" << -e;
      if (!(mag.mpq().get_den() == 1)) os << ")";
    }
  }
  if (pi_power_ == -1) return "(" + os.str() + ")/pi";
  return os.str();
}

CompiledPoly::CompiledPoly(int min_exponent, std::vector<double> coeffs)
    : min_exp_(min_exponent), coeffs_(std::move(coeffs)) {}

PolyValue CompiledPoly::evaluate(double z) const {
  if (coeffs_.empty()) return {};
  const int max_exp = min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  if (min_exp_ < 0 && z == 0.0) throw DomainError("Laurent polynomial evaluated at z = 0");
  PolyValue out;
  const double az = std::abs(z);
  // Nonnegative exponents: Horner in z from the top down to max(min_exp, 0).
  if (max_exp >= 0) {
    const int lo = std::max(min_exp_, 0);
    double v = 0.0;
    double a = 0.0;
    for (int e = max_exp; e >= lo; --e) {
      const double c = coeffs_[static_cast<std::size_t>(e - min_exp_)];
      v = v * z + c;
      a = a * az + std::abs(c);
    }
    const double zp = lo > 0 ? std::pow(z, lo) : 1.0;
    out.value += v * zp;
    out.abs_sum += a * std::abs(zp);
  }
  // Negative exponents: Horner in w = 1/z from the most negative up to -1.
  if (min_exp_ < 0) {
    const double w = 1.0 / z;
    const double aw = std::abs(w);
    const int hi = std::min(max_exp, -1);
    double v = 0.0;
    double a = 0.0;
    for (int e = min_exp_; e <= hi; ++e) {
      const double c = coeffs_[static_cast<std::size_t>(e - min_exp_)];
      v = v * w + c;
      a = a * aw + std::abs(c);
    }
    const double wp = std::pow(w, -hi);
    out.value += v * wp;
    out.abs_sum += a * std::abs(wp);
  }
  return out;
}

}  // namespace besstruve
