#include "besstruve/verify.hpp"

#include "besstruve/basefn.hpp"
#include "besstruve/bessel_deriv.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/integrals.hpp"
#include "besstruve/lommel.hpp"
#include "besstruve/oracle.hpp"
#include "besstruve/struve_deriv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <utility>

namespace besstruve {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"lommel", "bessel", "struve", "integrals", "scaling"};
  return names;
}

namespace {

using Terms = std::initializer_list<std::pair<int, long>>;

LaurentPoly table_poly(Terms terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Tracks the worst relative error against a tolerance with an absolute floor.
struct Worst {
  Worst(double rel, double floor) : rel_tol(rel), abs_floor(floor) {}

  double rel_tol;
  double abs_floor;
  double worst = 0;
  std::string where;
  bool ok = true;

  void add(double got, double want, const std::string& at) {
    const double diff = std::fabs(got - want);
    const double scaled = diff / std::max(std::fabs(want), abs_floor / rel_tol);
    if (!(scaled <= rel_tol)) ok = false;
    if (!(scaled <= worst)) {
      worst = scaled;
      where = at;
    }
  }
  CheckResult result(std::string name) const {
    return {std::move(name), ok, false, "worst scaled error " + sci(worst) + " at " + where};
  }
};

CheckResult exact_check(std::string name, bool ok, const std::string& failed_at) {
  return {std::move(name), ok, false, ok ? "exact" : "mismatch at " + failed_at};
}

SuiteReport lommel_suite() {
  SuiteReport r{"lommel", {}};
  const std::array<LaurentPoly, 8> r1_table{
      table_poly({{0, 1}}),
      table_poly({{-1, 2}}),
      table_poly({{-2, 8}, {0, -1}}),
      table_poly({{-3, 48}, {-1, -8}}),
      table_poly({{-4, 384}, {-2, -72}, {0, 1}}),
      table_poly({{-5, 3840}, {-3, -768}, {-1, 18}}),
      table_poly({{-6, 46080}, {-4, -9600}, {-2, 288}, {0, -1}}),
      table_poly({{-7, 645120}, {-5, -138240}, {-3, 4800}, {-1, -32}}),
  };
  const std::array<LaurentPoly, 7> r0_table{
      table_poly({{0, 1}}),
      table_poly({{-1, 4}}),
      table_poly({{-2, 24}, {0, -1}}),
      table_poly({{-3, 192}, {-1, -12}}),
      table_poly({{-4, 1920}, {-2, -144}, {0, 1}}),
      table_poly({{-5, 23040}, {-3, -1920}, {-1, 24}}),
      table_poly({{-6, 322560}, {-4, -28800}, {-2, 480}, {0, -1}}),
  };
  bool ok = true;
  std::string at;
  for (int nu = 1; nu <= 8; ++nu) {
    if (!(r1_poly(nu) == r1_table[static_cast<std::size_t>(nu - 1)] &&
          c_poly(nu - 1, nu) == r1_table[static_cast<std::size_t>(nu - 1)])) {
      ok = false;
      at += " R1(" + std::to_string(nu) + ")";
    }
  }
  for (int nu = 2; nu <= 8; ++nu) {
    if (!(r0_poly(nu) == r0_table[static_cast<std::size_t>(nu - 2)] &&
          c_poly(nu - 2, nu) == r0_table[static_cast<std::size_t>(nu - 2)])) {
      ok = false;
      at += " R0(" + std::to_string(nu) + ")";
    }
  }
  r.checks.push_back(exact_check("table R_{nu-1,1} nu=1..8, R_{nu-2,2} nu=2..8", ok, at));

  // The table's nu = 1 entry for R_{nu-2,2} reads z; the recurrence requires
  // C_{-1} = 0 so that J_1 = C_0 J_1 - C_{-1} J_0.
  const LaurentPoly table_entry = table_poly({{1, 1}});
  CheckResult flag{"table R_{-1,2} (nu=1)", true, true,
                   "flagged: table lists " + table_entry.to_string() + ", recurrence gives " +
                       (c_poly(-1, 1).is_zero() ? std::string("0") : c_poly(-1, 1).to_string())};
  r.checks.push_back(flag);

  ok = true;
  at.clear();
  for (int nu = 2; nu <= 40; ++nu) {
    if (!(r0_poly(nu) == c_poly(nu - 2, nu)) || !(r1_poly(nu) == c_poly(nu - 1, nu))) {
      ok = false;
      at += " " + std::to_string(nu);
    }
  }
  r.checks.push_back(exact_check("closed-form R0/R1 == recurrence, nu=2..40", ok, at));

  ok = true;
  at.clear();
  for (int nu = 2; nu <= 20; ++nu) {
    for (int j = 0; j <= nu - 2; ++j) {
      const Rational c = pochhammer(Rational(1 - nu), j) * pow2(j) * (j % 2 == 0 ? 1 : -1);
      if (!(c_poly(j, nu) == reduced_2f3_poly(j, nu).shifted(-j) * c)) {
        ok = false;
        at += " (" + std::to_string(j) + "," + std::to_string(nu) + ")";
      }
    }
  }
  r.checks.push_back(exact_check("C_j == (-2/z)^j (1-nu)_j 2F3, nu=2..20", ok, at));

  Worst w{1e-10, 1e-12};
  for (int nu = 2; nu <= 10; ++nu) {
    for (double z : {0.5, 1.0, 2.0, 5.0, 8.0}) {
      w.add(bessel_reduce(nu, z), bessel_jn(nu, z).value,
            "nu=" + std::to_string(nu) + " z=" + sci(z));
    }
  }
  r.checks.push_back(w.result("Bessel reduction vs series, nu=2..10"));
  return r;
}

SuiteReport bessel_suite() {
  SuiteReport r{"bessel", {}};
  bool ok = true;
  std::string at;
  for (int k = 0; k <= 24; ++k) {
    const BesselDerivForm cf = p_polys_closed_form(k);
    const BesselDerivForm& rec = p_polys(k);
    if (!(cf.p1 == rec.p1 && cf.p0 == rec.p0)) {
      ok = false;
      at += " " + std::to_string(k);
    }
  }
  r.checks.push_back(exact_check("P via closed-form R == P via recurrence, k=0..24", ok, at));

  Worst w{1e-8, 1e-12};
  for (int k = 0; k <= 15; ++k) {
    for (double z : {1.0, 2.0, 5.0, 10.0}) {
      w.add(deriv_j1z(k, z).value, quad_deriv_kernel(KernelKind::bessel, k, z),
            "k=" + std::to_string(k) + " z=" + sci(z));
    }
  }
  r.checks.push_back(w.result("d^k[J1/z] vs quadrature, k=0..15"));

  Worst a{1e-12, 1e-300};
  for (int m = 0; m <= 15; ++m) {
    const double want = std::pow(-1.0, m) * std::tgamma(m + 0.5) /
                        (2 * std::sqrt(std::numbers::pi) * std::tgamma(m + 2.0));
    a.add(deriv_j1z_at_zero(2 * m), want, "m=" + std::to_string(m));
    a.add(taylor_deriv(KernelKind::bessel, 2 * m, 0.0, 10), want, "taylor m=" + std::to_string(m));
  }
  r.checks.push_back(a.result("d^{2m}[J1/z](0), m=0..15"));

  Worst b{1e-9, 1e-9};
  EvalConfig taylor_cfg;
  taylor_cfg.small_z_threshold = std::nextafter(0.5, 1.0);
  for (int k = 0; k <= 10; ++k) {
    b.add(deriv_j1z(k, 0.5).value, deriv_j1z(k, 0.5, taylor_cfg).value, "k=" + std::to_string(k));
  }
  r.checks.push_back(b.result("series vs default policy at z=0.5, k=0..10"));
  return r;
}

SuiteReport struve_suite() {
  SuiteReport r{"struve", {}};
  bool ok = true;
  std::string at;
  for (int nu = 2; nu <= 24; ++nu) {
    if (!(s_sum_poly(nu) == s_sum_poly_ascending(nu))) {
      ok = false;
      at += " " + std::to_string(nu);
    }
  }
  r.checks.push_back(exact_check("S descending == S ascending, nu=2..24", ok, at));

  ok = true;
  at.clear();
  for (int k = 1; k <= 21; k += 2) {
    const StruveDerivForm e = sigma_polys_explicit(k);
    const StruveDerivForm& c = sigma_polys_composed(k);
    if (!(e.sigma0 == c.sigma0 && e.sigma1 == c.sigma1 && e.sigma2 == c.sigma2)) {
      ok = false;
      at += " " + std::to_string(k);
    }
  }
  r.checks.push_back(exact_check("explicit sigma == composed sigma, odd k=1..21", ok, at));

  ok = true;
  at.clear();
  for (int k = 0; k <= 20; ++k) {
    const StruveDerivForm& s = sigma_polys_composed(k);
    const BesselDerivForm& p = p_polys(k);
    const Rational half(1, 2);
    if (!(s.sigma1.times_power(half, -(k + 1)) == p.p1 && -s.sigma0.times_power(half, -k) == p.p0)) {
      ok = false;
      at += " " + std::to_string(k);
    }
  }
  r.checks.push_back(exact_check("H prefactors == J prefactors, k=0..20", ok, at));

  Worst red{1e-10, 1e-12};
  for (int nu = 2; nu <= 10; ++nu) {
    for (double z : {0.5, 1.0, 2.0, 5.0, 8.0}) {
      red.add(struve_reduce(nu, z), struve_hn(nu, z).value,
              "nu=" + std::to_string(nu) + " z=" + sci(z));
    }
  }
  r.checks.push_back(red.result("Struve reduction vs series, nu=2..10"));

  Worst neg{1e-10, 1e-10};
  for (int nu = 0; nu <= 8; ++nu) {
    for (double z : {0.5, 2.0, 5.0}) {
      neg.add(neg_order_struve(nu, z), struve_hn(-nu, z).value,
              "nu=" + std::to_string(nu) + " z=" + sci(z));
    }
  }
  r.checks.push_back(neg.result("H_{-nu} relation vs series, nu=0..8"));

  Worst d{1e-8, 1e-12};
  for (int k = 0; k <= 13; ++k) {
    for (double z : {1.0, 2.0, 5.0, 10.0}) {
      d.add(deriv_h1z(k, z).value, quad_deriv_kernel(KernelKind::struve, k, z),
            "k=" + std::to_string(k) + " z=" + sci(z));
    }
  }
  r.checks.push_back(d.result("d^k[H1/z] vs quadrature, k=0..13"));

  // Expansion over H_{k+1-i} before reduction, each H from its own series.
  Worst e9{1e-9, 1e-9};
  for (int k = 1; k <= 8; ++k) {
    for (double z : {1.0, 3.0}) {
      double v = struve_remainder_poly(k)(z);
      double fact = std::tgamma(k + 1.0);
      for (int i = 0; 2 * i <= k; ++i) {
        v += 2 * fact * std::pow(-1.0, i) / (std::tgamma(i + 1.0) * std::tgamma(k - 2 * i + 1.0)) /
             std::pow(2 * z, i + 1) * struve_hn(k + 1 - i, z).value;
      }
      if (k % 2 != 0) v = -v;
      e9.add(v, deriv_h1z(k, z).value, "k=" + std::to_string(k) + " z=" + sci(z));
    }
  }
  r.checks.push_back(e9.result("unreduced expansion vs d^k[H1/z], k=1..8"));

  Worst a{1e-12, 1e-300};
  for (int m = 0; m <= 15; ++m) {
    const double want = std::pow(-1.0, m) * std::tgamma(m + 1.0) /
                        (2 * std::sqrt(std::numbers::pi) * std::tgamma(m + 2.5));
    a.add(deriv_h1z_at_zero(2 * m + 1), want, "m=" + std::to_string(m));
    a.add(taylor_deriv(KernelKind::struve, 2 * m + 1, 0.0, 10), want, "taylor m=" + std::to_string(m));
  }
  r.checks.push_back(a.result("d^{2m+1}[H1/z](0), m=0..15"));
  return r;
}

SuiteReport integrals_suite(double tol) {
  SuiteReport r{"integrals", {}};
  double worst_s = 0;
  double worst_c = 0;
  double worst_honesty = 0;
  std::string at_s;
  std::string at_c;
  for (double z : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (double zeta : {0.0, 0.25, 1.0, 2.0, 5.0}) {
      const IntegralRequest req{z, zeta, {}};
      const std::string at = "z=" + sci(z) + " zeta=" + sci(zeta);
      const EvalResult s = s_integral(req);
      const EvalResult c = c_integral(req);
      const double ds = std::fabs(s.value - quad_defining_s(z, zeta, 1e-13));
      const double dc = std::fabs(c.value - quad_defining_c(z, zeta, 1e-13));
      if (!(ds <= worst_s)) {
        worst_s = ds;
        at_s = at;
      }
      if (!(dc <= worst_c)) {
        worst_c = dc;
        at_c = at;
      }
      // Quadrature noise (~1e-15) is not counted against the estimate.
      for (auto [d, est] : {std::pair{ds, s.abs_err_estimate}, std::pair{dc, c.abs_err_estimate}}) {
        worst_honesty = std::max(worst_honesty, (d - 1e-14) / std::max(est, 1e-300));
      }
    }
  }
  r.checks.push_back({"S series vs quadrature, 6x5 grid", worst_s <= tol, false,
                      "max |diff| " + sci(worst_s) + " at " + at_s});
  r.checks.push_back({"C series vs quadrature, 6x5 grid", worst_c <= tol, false,
                      "max |diff| " + sci(worst_c) + " at " + at_c});
  r.checks.push_back({"error estimate honest (|diff| <= 10 est)", worst_honesty <= 10, false,
                      "max |diff|/est " + sci(worst_honesty)});
  return r;
}

SuiteReport scaling_suite() {
  SuiteReport r{"scaling", {}};
  constexpr int m = 40;
  const double norm = 2 * std::sqrt(std::numbers::pi) * std::pow(m, 1.5);
  const double j = std::fabs(deriv_j1z_at_zero(2 * m)) * norm;
  const double h = std::fabs(deriv_h1z_at_zero(2 * m + 1)) * norm;
  r.checks.push_back({"J amplitude m^{3/2} scaling at m=40", j >= 0.85 && j <= 1.15, false,
                      "scaled amplitude " + sci(j)});
  r.checks.push_back({"H amplitude m^{3/2} scaling at m=40", h >= 0.85 && h <= 1.15, false,
                      "scaled amplitude " + sci(h)});
  return r;
}

SuiteReport run_suite(std::string_view name, double tol) {
  if (name == "lommel") return lommel_suite();
  if (name == "bessel") return bessel_suite();
  if (name == "struve") return struve_suite();
  if (name == "integrals") return integrals_suite(tol);
  return scaling_suite();
}

}  // namespace

std::vector<SuiteReport> run_verify(std::string_view suite, double integral_tol) {
  if (!(integral_tol > 0) || !std::isfinite(integral_tol)) {
    throw DomainError("verify: tolerance must be positive");
  }
  const auto& names = verify_suite_names();
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const std::string& n : names) out.push_back(run_suite(n, integral_tol));
    return out;
  }
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("verify: unknown suite '" + std::string(suite) + "'");
  }
  out.push_back(run_suite(suite, integral_tol));
  return out;
}

nlohmann::ordered_json to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json j;
  bool all = true;
  j["suites"] = nlohmann::ordered_json::array();
  for (const SuiteReport& s : reports) {
    nlohmann::ordered_json js;
    js["suite"] = s.suite;
    js["passed"] = s.passed();
    js["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : s.checks) {
      js["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"flagged", c.flagged},
                              {"detail", c.detail}});
    }
    all = all && s.passed();
    j["suites"].push_back(js);
  }
  j["passed"] = all;
  return j;
}

}  // namespace besstruve
