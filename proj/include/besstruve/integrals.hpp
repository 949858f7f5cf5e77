#pragma once

#include "besstruve/eval.hpp"

#include <vector>

namespace besstruve {

/// Highest series index kappa the integral evaluators will use.
inline constexpr int kMaxKappa = 25;

struct IntegralRequest {
  double z = 0.0;
  double zeta = 0.0;
  EvalConfig cfg;
};

/// S(z, zeta) = int_0^{pi/2} cos t sin^2 t sin(z cos t) sin(zeta cos^2 t) dt
///            = (pi/2) sum_kappa (-1)^kappa zeta^(2kappa+1)/(2kappa+1)!
///                     d^(4kappa+3)[J1(z)/z].
EvalResult s_integral(const IntegralRequest& req);

/// C(z, zeta) = int_0^{pi/2} cos t sin^2 t cos(z cos t) cos(zeta cos^2 t) dt
///            = (pi/2) sum_kappa (-1)^kappa zeta^(2kappa)/(2kappa)!
///                     d^(4kappa+1)[H1(z)/z].
EvalResult c_integral(const IntegralRequest& req);

/// Bound on |d^k[J1/z]| and |d^k[H1/z]| for real z:
/// Gamma((k+1)/2) / (2 sqrt(pi) Gamma(k/2 + 2)). 0 <= k <= 300.
double truncation_bound(int k);

enum class IntegralKind { s, c };

/// One evaluated series term, in the sign-canonical frame z, zeta >= 0.
struct SeriesTerm {
  int kappa = 0;
  int order = 0;          // derivative order 4kappa+3 or 4kappa+1
  double weight = 0.0;    // (pi/2) zeta^p / p!
  double term = 0.0;      // signed contribution to the sum
  EvalResult derivative;  // the inner derivative evaluation
};

/// The terms s_integral / c_integral sum for this request.
std::vector<SeriesTerm> integral_terms(IntegralKind kind, const IntegralRequest& req);

}  // namespace besstruve
