#include "mp_reduce.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace besstruve::detail {

namespace {

long log2_magnitude(const mpf_class& x) {
  if (sgn(x) == 0) return -1000000;
  long e = 0;
  mpf_get_d_2exp(&e, x.get_mpf_t());
  return e;
}

struct SeriesValue {
  mpf_class value;
  long lost_bits = 0;  // log2(largest term / |sum|)
};

// J_nu (bessel) or pi H_nu (struve) for nu in {0, 1}; the struve series is
// scaled by pi so that all its coefficients are rational.
SeriesValue base_series(ReduceFamily family, int nu, const mpf_class& z, mp_bitcnt_t prec) {
  const mpf_class h2(z * z / 4, prec);
  mpf_class term(1, prec);
  mpf_class a(0, prec);
  mpf_class b(0, prec);
  if (family == ReduceFamily::bessel) {
    if (nu == 1) term = z / 2;
    a = 1;
    b = nu + 1;
  } else {
    // pi/(Gamma(3/2) Gamma(nu+3/2)) (z/2)^(nu+1)
    term = nu == 0 ? mpf_class(4 * z / 2, prec) : mpf_class(mpf_class(8, prec) / 3 * h2, prec);
    a = mpf_class(3, prec) / 2;
    b = mpf_class(nu, prec) + a;
  }
  mpf_class sum(0, prec);
  long max_mag = log2_magnitude(term);
  const long stop = static_cast<long>(prec) + 16;
  for (int k = 0; k < 100000; ++k) {
    sum += term;
    max_mag = std::max(max_mag, log2_magnitude(term));
    term *= h2;
    term /= a * b;
    term = -term;
    a += 1;
    b += 1;
    if (sgn(term) == 0) break;
    // Terms decrease once a b > |z|^2 / 4.
    if (cmp(a * b, h2) > 0 && log2_magnitude(term) < log2_magnitude(sum) - stop) break;
  }
  return {sum, max_mag - log2_magnitude(sum)};
}

mpf_class evaluate(const LaurentPoly& p, const mpf_class& z, mp_bitcnt_t prec, long& max_mag) {
  mpf_class sum(0, prec);
  for (const auto& [e, c] : p.terms()) {
    mpf_class zp(1, prec);
    mpf_class base(e >= 0 ? z : mpf_class(1 / z, prec), prec);
    mpf_pow_ui(zp.get_mpf_t(), base.get_mpf_t(), static_cast<unsigned long>(std::abs(e)));
    const mpf_class t(mpf_class(c.mpq(), prec) * zp, prec);
    max_mag = std::max(max_mag, log2_magnitude(t));
    sum += t;
  }
  return sum;
}

}  // namespace

double reduce_multiprecision(ReduceFamily family, const LaurentPoly& r1, const LaurentPoly& r0,
                             const LaurentPoly& s, double z) {
  double out = 0;
  for (mp_bitcnt_t prec = 128; prec <= 8192; prec *= 2) {
    const mpf_class zz(z, prec);
    const SeriesValue f0 = base_series(family, 0, zz, prec);
    const SeriesValue f1 = base_series(family, 1, zz, prec);
    long poly_mag = -1000000;
    const mpf_class t1(evaluate(r1, zz, prec, poly_mag) * f1.value, prec);
    const mpf_class t0(evaluate(r0, zz, prec, poly_mag) * f0.value, prec);
    const mpf_class t2 = evaluate(s, zz, prec, poly_mag);
    const mpf_class result(t1 - t0 + t2, prec);
    const long top = std::max({log2_magnitude(t1), log2_magnitude(t0), poly_mag});
    const long lost = top - log2_magnitude(result) + std::max(f0.lost_bits, f1.lost_bits);
    out = result.get_d();
    if (family == ReduceFamily::struve) out /= std::numbers::pi;
    if (sgn(result) == 0 && top < -1000) break;
    if (lost + 64 < static_cast<long>(prec)) break;
  }
  return out;
}

}  // namespace besstruve::detail
