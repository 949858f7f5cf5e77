#include "besstruve/quadrature.hpp"

#include "besstruve/errors.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <vector>

namespace besstruve {

namespace {

struct NodeTable {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Newton iteration on P_n in long double, symmetric nodes.
NodeTable build_table(int n) {
  using ld = long double;
  NodeTable t{std::vector<double>(static_cast<std::size_t>(n)),
              std::vector<double>(static_cast<std::size_t>(n))};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    ld x = std::cos(std::numbers::pi_v<ld> * (i + 0.75L) / (n + 0.5L));
    ld dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      ld p0 = 1;
      ld p1 = x;
      for (int k = 2; k <= n; ++k) {
        const ld p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const ld dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const ld w = 2 / ((1 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    t.nodes[lo] = static_cast<double>(-x);
    t.nodes[hi] = static_cast<double>(x);
    t.weights[lo] = t.weights[hi] = static_cast<double>(w);
  }
  return t;
}

const NodeTable& table_for(int n) {
  static const std::array<NodeTable, 3> tables{build_table(16), build_table(32), build_table(64)};
  switch (n) {
    case 16: return tables[0];
    case 32: return tables[1];
    case 64: return tables[2];
    default: throw DomainError("gauss_legendre: nodes per panel must be 16, 32 or 64");
  }
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
  const NodeTable& t = table_for(n);
  return {t.nodes, t.weights};
}

QuadratureOutcome integrate_fixed(const std::function<double(double)>& f, double a, double b,
                                  int panels, int nodes_per_panel) {
  if (panels <= 0) throw DomainError("integrate_fixed: panel count must be positive");
  const NodeTable& t = table_for(nodes_per_panel);
  const double width = (b - a) / panels;
  // Panel sums are accumulated in order, so the result is deterministic.
  long double total = 0;
  long double abs_total = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    long double s = 0;
    long double sa = 0;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const double fx = f(mid + half * t.nodes[i]);
      s += t.weights[i] * static_cast<long double>(fx);
      sa += t.weights[i] * std::fabs(static_cast<long double>(fx));
    }
    total += half * s;
    abs_total += half * sa;
  }
  return {static_cast<double>(total), 0.0, static_cast<double>(abs_total), panels};
}

QuadratureOutcome integrate_refined(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureRule& rule) {
  if (!(rule.target_tol > 0)) throw DomainError("integrate_refined: target_tol must be positive");
  QuadratureOutcome prev = integrate_fixed(f, a, b, rule.panels, rule.nodes_per_panel);
  for (int refinement = 0; refinement < 20; ++refinement) {
    QuadratureOutcome next = integrate_fixed(f, a, b, 2 * prev.panels, rule.nodes_per_panel);
    next.last_change = std::abs(next.value - prev.value);
    const double floor = 16 * DBL_EPSILON * next.abs_integral;
    if (next.last_change < std::max(rule.target_tol, floor)) return next;
    prev = next;
  }
  throw ConvergenceError("quadrature did not converge after 20 refinements");
}

}  // namespace besstruve
