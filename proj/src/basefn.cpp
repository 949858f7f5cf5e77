#include "besstruve/basefn.hpp"

#include "besstruve/errors.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace besstruve {

namespace {

using ld = long double;

constexpr ld kLdEps = std::numeric_limits<ld>::epsilon();
constexpr ld kPi = std::numbers::pi_v<ld>;

// Regime boundaries. The power series loses about z/ln(10) digits; the
// asymptotic expansions need z large enough that their smallest term is
// below double precision (~e^{-2z} for J, ~e^{-z}/z for H - Y).
constexpr double kSeriesBelow = 8.0;
constexpr double kBesselAsymptoticFrom = 20.0;
constexpr double kStruveAsymptoticFrom = 35.0;

void check_argument(double z, const char* fn) {
  if (!std::isfinite(z) || std::abs(z) > kMaxArgument) {
    throw DomainError(std::string(fn) + ": argument outside |z| <= 50");
  }
}

void check_order(int nu, int lo, int hi, const char* fn) {
  if (nu < lo || nu > hi) throw DomainError(std::string(fn) + ": order out of range");
}

class NeumaierSum {
 public:
  void add(ld x) {
    const ld t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  ld value() const { return sum_ + comp_; }

 private:
  ld sum_ = 0;
  ld comp_ = 0;
};

BaseFnValue finish(ld value, ld err) {
  const double v = static_cast<double>(value);
  return {v, static_cast<double>(err) + 0.5 * DBL_EPSILON * std::abs(v)};
}

// Sum t_0 + t_1 + ... where t_k = t_{k-1} * ratio(k). Stops once a term no
// longer changes the long double sum.
template <class Ratio>
BaseFnValue power_series(ld t0, Ratio ratio) {
  NeumaierSum sum;
  ld term = t0;
  ld max_term = std::fabs(t0);
  int k = 0;
  for (; k < 1000; ++k) {
    if (k > 0) term *= ratio(k);
    sum.add(term);
    max_term = std::max(max_term, std::fabs(term));
    if (term == 0 || std::fabs(term) <= kLdEps * std::fabs(sum.value())) break;
  }
  const ld err = std::fabs(term) + (k + 1) * kLdEps * max_term;
  return finish(sum.value(), err);
}

BaseFnValue jn_series(int nu, ld z) {
  const ld h = z / 2;
  ld t0 = 1;
  for (int i = 1; i <= nu; ++i) t0 *= h / i;
  return power_series(t0, [&](int k) { return -h * h / (static_cast<ld>(k) * (k + nu)); });
}

BaseFnValue hn_series(int nu, ld z) {
  const ld h = z / 2;
  // (z/2)^{nu+1} / (Gamma(3/2) Gamma(nu + 3/2))
  const ld t0 = std::pow(h, static_cast<ld>(nu + 1)) /
                (std::tgamma(static_cast<ld>(1.5)) * std::tgamma(static_cast<ld>(nu) + 1.5L));
  return power_series(t0, [&](int k) {
    return -h * h / ((static_cast<ld>(k) + 0.5L) * (static_cast<ld>(k + nu) + 0.5L));
  });
}

// Normalized J_0..J_n(x), x > 0, by Miller's backward recurrence with the
// normalization J_0 + 2 sum J_2k = 1.
struct MillerTable {
  std::vector<ld> j;
  ld err = 0;  // absolute error bound shared by every entry
};

MillerTable miller_table(ld x) {
  const int start = 2 * static_cast<int>(std::ceil((x + 12 * std::sqrt(x) + 30) / 2));
  std::vector<ld> j(static_cast<std::size_t>(start) + 2, 0);
  j[static_cast<std::size_t>(start)] = 1e-30L;
  for (int n = start; n >= 1; --n) {
    const auto un = static_cast<std::size_t>(n);
    j[un - 1] = (2 * n / x) * j[un] - j[un + 1];
  }
  NeumaierSum norm;
  norm.add(j[0]);
  for (std::size_t k = 2; k <= static_cast<std::size_t>(start); k += 2) norm.add(2 * j[k]);
  const ld scale = 1 / norm.value();
  ld abs_sum = 0;
  for (auto& v : j) {
    v *= scale;
    abs_sum += std::fabs(v);
  }
  return {std::move(j), 4 * start * kLdEps * (1 + abs_sum)};
}

// H_0 = (4/pi) sum_k J_{2k+1}/(2k+1)
// H_1 = (2/pi)(1 - J_0) + (4/pi) sum_{k>=1} J_{2k}/(4k^2 - 1)
BaseFnValue struve_from_bessel_series(int order, const MillerTable& t) {
  NeumaierSum sum;
  const std::size_t n = t.j.size();
  if (order == 0) {
    for (std::size_t k = 0; 2 * k + 1 < n; ++k) sum.add(t.j[2 * k + 1] / (2 * k + 1));
    return finish(4 / kPi * sum.value(), 4 / kPi * 2 * t.err);
  }
  for (std::size_t k = 1; 2 * k < n; ++k) {
    sum.add(t.j[2 * k] / (4 * static_cast<ld>(k) * k - 1));
  }
  return finish(2 / kPi * (1 - t.j[0]) + 4 / kPi * sum.value(), 4 / kPi * 2 * t.err);
}

// Hankel large-argument expansion for order 0 or 1: returns J and Y.
struct JY {
  ld j, y, err;
};

JY hankel_asymptotic(int nu, ld x) {
  const ld mu = 4.0L * nu * nu;
  NeumaierSum p;
  NeumaierSum q;
  p.add(1);
  ld a = 1;
  ld omitted = 0;
  for (int k = 1; k < 200; ++k) {
    const ld odd = 2 * k - 1;
    const ld next = a * (mu - odd * odd) / (k * 8 * x);
    if (std::fabs(next) >= std::fabs(a) && k > 1) {
      omitted = std::fabs(a);
      break;
    }
    a = next;
    if (a == 0) break;
    // Signs follow (-1)^{floor(k/2)} on alternate series.
    const ld sgn = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0) {
      p.add(sgn * a);
    } else {
      q.add(sgn * a);
    }
    if (std::fabs(a) < kLdEps * kLdEps) {
      omitted = 0;
      break;
    }
    omitted = std::fabs(a);
  }
  const ld chi = x - (nu / 2.0L + 0.25L) * kPi;
  const ld amp = std::sqrt(2 / (kPi * x));
  const ld c = std::cos(chi);
  const ld s = std::sin(chi);
  const ld pv = p.value();
  const ld qv = q.value();
  return {amp * (pv * c - qv * s), amp * (pv * s + qv * c), amp * (omitted + 16 * kLdEps)};
}

// H_nu - Y_nu ~ (1/pi) sum_k Gamma(k+1/2) (x/2)^{nu-2k-1} / Gamma(nu+1/2-k),
// truncated at its smallest term.
BaseFnValue struve_asymptotic(int nu, ld x) {
  const JY jy = hankel_asymptotic(nu, x);
  const ld h = x / 2;
  ld t = std::sqrt(kPi) * std::pow(h, static_cast<ld>(nu - 1)) / std::tgamma(nu + 0.5L);
  NeumaierSum sum;
  ld omitted = 0;
  for (int k = 0; k < 200; ++k) {
    sum.add(t);
    const ld next = t * (k + 0.5L) * (nu - 0.5L - k) / (h * h);
    if (std::fabs(next) >= std::fabs(t) || next == 0) {
      omitted = std::fabs(next);
      break;
    }
    t = next;
  }
  const ld value = jy.y + sum.value() / kPi;
  return finish(value, jy.err + omitted / kPi + 8 * kLdEps * std::fabs(value));
}

enum class Base { j0, j1, h0, h1 };

BaseFnValue evaluate_nonnegative(Base which, ld x) {
  const bool bessel = which == Base::j0 || which == Base::j1;
  const int order = (which == Base::j0 || which == Base::h0) ? 0 : 1;
  if (x < kSeriesBelow) return bessel ? jn_series(order, x) : hn_series(order, x);
  const double asymptotic_from = bessel ? kBesselAsymptoticFrom : kStruveAsymptoticFrom;
  if (x >= asymptotic_from) {
    if (bessel) {
      const JY jy = hankel_asymptotic(order, x);
      return finish(jy.j, jy.err);
    }
    return struve_asymptotic(order, x);
  }
  const MillerTable table = miller_table(x);
  if (bessel) return finish(table.j[static_cast<std::size_t>(order)], table.err);
  return struve_from_bessel_series(order, table);
}

}  // namespace

BaseFnValue bessel_j0(double z) {
  check_argument(z, "bessel_j0");
  return evaluate_nonnegative(Base::j0, std::abs(z));
}

BaseFnValue bessel_j1(double z) {
  check_argument(z, "bessel_j1");
  BaseFnValue v = evaluate_nonnegative(Base::j1, std::abs(z));
  if (z < 0) v.value = -v.value;
  return v;
}

BaseFnValue struve_h0(double z) {
  check_argument(z, "struve_h0");
  BaseFnValue v = evaluate_nonnegative(Base::h0, std::abs(z));
  if (z < 0) v.value = -v.value;
  return v;
}

BaseFnValue struve_h1(double z) {
  check_argument(z, "struve_h1");
  return evaluate_nonnegative(Base::h1, std::abs(z));
}

BaseFnValue bessel_jn(int nu, double z) {
  check_argument(z, "bessel_jn");
  check_order(nu, 0, kMaxOrder, "bessel_jn");
  return jn_series(nu, z);
}

BaseFnValue struve_hn(int nu, double z) {
  check_argument(z, "struve_hn");
  check_order(nu, -kMaxOrder, kMaxOrder, "struve_hn");
  if (z == 0.0 && nu + 1 < 0) throw DomainError("struve_hn: negative power of z at z = 0");
  return hn_series(nu, z);
}

}  // namespace besstruve
