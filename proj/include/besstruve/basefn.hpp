#pragma once

// Double-precision Bessel J and Struve H functions of integer order for real
// arguments |z| <= 50. These are the base functions every closed form in the
// library is reduced to.

namespace besstruve {

inline constexpr double kMaxArgument = 50.0;
inline constexpr int kMaxOrder = 64;

struct BaseFnValue {
  double value = 0.0;
  double abs_err_estimate = 0.0;
};

BaseFnValue bessel_j0(double z);
BaseFnValue bessel_j1(double z);
BaseFnValue struve_h0(double z);
BaseFnValue struve_h1(double z);

/// J_nu(z) from the ascending power series, 0 <= nu <= 64. Accurate to
/// ~1e-12 for |z| <= 12; beyond that the error estimate grows with the
/// cancellation in the series.
BaseFnValue bessel_jn(int nu, double z);

/// H_nu(z) from its ascending power series, -64 <= nu <= 64. For nu <= -2
/// the series has negative powers of z and z = 0 is rejected.
BaseFnValue struve_hn(int nu, double z);

}  // namespace besstruve
