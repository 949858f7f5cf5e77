#include "besstruve/cli.hpp"

#include "besstruve/bessel_deriv.hpp"
#include "besstruve/errors.hpp"
#include "besstruve/integrals.hpp"
#include "besstruve/lommel.hpp"
#include "besstruve/struve_deriv.hpp"
#include "besstruve/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <exception>
#include <optional>
#include <string_view>
#include <system_error>
#include <thread>

namespace besstruve {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_grid(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DomainError(std::string("malformed value in ") + flag + ": '" + std::string(item) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

struct EvalOptions {
  std::string subject;
  std::optional<double> z;
  std::optional<double> zeta;
  std::optional<int> k;
  double tol = 1e-10;
  std::string format = "json";
};

struct PolyOptions {
  std::string family;
  std::optional<int> nu;
  std::optional<int> k;
};

struct TableOptions {
  std::string subject;
  std::string z_grid;
  std::string zeta_grid;
  double tol = 1e-10;
  std::string format = "csv";
};

struct VerifyOptions {
  std::string suite = "all";
  double tol = 1e-8;
};

ordered_json result_fields(ordered_json j, const EvalResult& r) {
  j["value"] = r.value;
  j["abs_err_estimate"] = r.abs_err_estimate;
  j["terms_used"] = r.terms_used;
  j["path"] = std::string(to_string(r.path));
  return j;
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  EvalConfig cfg;
  cfg.abs_tol = o.tol;
  const bool integral = o.subject == "s" || o.subject == "c";
  if (!o.z) throw DomainError("eval: --z is required");
  if (integral && !o.zeta) throw DomainError("eval " + o.subject + ": --zeta is required");
  if (!integral && !o.k) throw DomainError("eval " + o.subject + ": --k is required");

  EvalResult r;
  if (o.subject == "s") {
    r = s_integral({*o.z, *o.zeta, cfg});
  } else if (o.subject == "c") {
    r = c_integral({*o.z, *o.zeta, cfg});
  } else if (o.subject == "dj1z") {
    r = deriv_j1z(*o.k, *o.z, cfg);
  } else {
    r = deriv_h1z(*o.k, *o.z, cfg);
  }

  if (o.format == "csv") {
    if (integral) {
      out << "subject,z,zeta,value,err,terms,path\n"
          << o.subject << ',' << format_real(*o.z) << ',' << format_real(*o.zeta);
    } else {
      out << "subject,k,z,value,err,terms,path\n"
          << o.subject << ',' << *o.k << ',' << format_real(*o.z);
    }
    out << ',' << format_real(r.value) << ',' << format_real(r.abs_err_estimate) << ','
        << r.terms_used << ',' << to_string(r.path) << '\n';
    return kExitOk;
  }
  ordered_json j;
  j["subject"] = o.subject;
  if (!integral) j["k"] = *o.k;
  j["z"] = *o.z;
  if (integral) j["zeta"] = *o.zeta;
  j["tol"] = o.tol;
  out << result_fields(std::move(j), r).dump(2) << '\n';
  return kExitOk;
}

int cmd_poly(const PolyOptions& o, std::ostream& out) {
  ordered_json j;
  j["family"] = o.family;
  const bool by_nu = o.family == "r0" || o.family == "r1" || o.family == "s_sum";
  if (by_nu && !o.nu) throw DomainError("poly " + o.family + ": --nu is required");
  if (!by_nu && !o.k) throw DomainError("poly " + o.family + ": --k is required");
  if (o.family == "r0") {
    j["nu"] = *o.nu;
    j["poly"] = r0_poly(*o.nu).to_json();
  } else if (o.family == "r1") {
    j["nu"] = *o.nu;
    j["poly"] = r1_poly(*o.nu).to_json();
  } else if (o.family == "s_sum") {
    j["nu"] = *o.nu;
    j["poly"] = s_sum_poly(*o.nu).to_json();
  } else if (o.family == "p") {
    const BesselDerivForm& f = p_polys(*o.k);
    j["k"] = *o.k;
    j["p1"] = f.p1.to_json();
    j["p0"] = f.p0.to_json();
  } else {
    const StruveDerivForm& f = sigma_polys_composed(*o.k);
    j["k"] = *o.k;
    j["sigma0"] = f.sigma0.to_json();
    j["sigma1"] = f.sigma1.to_json();
    j["sigma2"] = f.sigma2.to_json();
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct Row {
  double z = 0;
  double zeta = 0;
  EvalResult result;
  std::exception_ptr error;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
  const std::vector<double> zs = parse_grid(o.z_grid, "--z-grid");
  const std::vector<double> zetas = parse_grid(o.zeta_grid, "--zeta-grid");
  EvalConfig cfg;
  cfg.abs_tol = o.tol;
  validate(cfg);
  std::vector<Row> rows;
  for (double z : zs) {
    for (double zeta : zetas) rows.push_back({z, zeta, {}, nullptr});
  }
  // Rows are filled in place, so output order never depends on scheduling.
  const std::size_t nthreads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(rows.size(), 1));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < rows.size(); i += nthreads) {
      Row& row = rows[i];
      try {
        const IntegralRequest req{row.z, row.zeta, cfg};
        row.result = o.subject == "s" ? s_integral(req) : c_integral(req);
      } catch (...) {
        row.error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  for (const Row& row : rows) {
    if (row.error) std::rethrow_exception(row.error);
  }

  if (o.format == "csv") {
    out << "z,zeta,value,err,terms,path\n";
    for (const Row& row : rows) {
      out << format_real(row.z) << ',' << format_real(row.zeta) << ',' << format_real(row.result.value)
          << ',' << format_real(row.result.abs_err_estimate) << ',' << row.result.terms_used << ','
          << to_string(row.result.path) << '\n';
    }
    return kExitOk;
  }
  ordered_json arr = ordered_json::array();
  for (const Row& row : rows) {
    ordered_json j;
    j["z"] = row.z;
    j["zeta"] = row.zeta;
    arr.push_back(result_fields(std::move(j), row.result));
  }
  out << arr.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const std::vector<SuiteReport> reports = run_verify(o.suite, o.tol);
  bool all = true;
  for (const SuiteReport& s : reports) {
    for (const CheckResult& c : s.checks) {
      const char* tag = c.flagged ? "FLAG" : (c.passed ? "PASS" : "FAIL");
      out << tag << ' ' << s.suite << ": " << c.name << " (" << c.detail << ")\n";
    }
    all = all && s.passed();
  }
  out << to_json(reports).dump() << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integrals S, C and derivatives of J1(z)/z, H1(z)/z via Bessel/Struve closed forms"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an integral or a derivative");
  eval_cmd->add_option("subject", eval.subject, "s, c, dj1z or dh1z")
      ->required()
      ->check(CLI::IsMember({"s", "c", "dj1z", "dh1z"}));
  eval_cmd->add_option("--z", eval.z, "first argument");
  eval_cmd->add_option("--zeta", eval.zeta, "second argument of s and c");
  eval_cmd->add_option("--k", eval.k, "derivative order for dj1z and dh1z");
  eval_cmd->add_option("--tol", eval.tol, "absolute tolerance")->capture_default_str();
  eval_cmd->add_option("--format", eval.format, "json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "print an exact prefactor polynomial as JSON");
  poly_cmd->add_option("family", poly.family, "r0, r1, p, sigma or s_sum")
      ->required()
      ->check(CLI::IsMember({"r0", "r1", "p", "sigma", "s_sum"}));
  poly_cmd->add_option("--nu", poly.nu, "order for r0, r1, s_sum");
  poly_cmd->add_option("--k", poly.k, "derivative order for p and sigma");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "evaluate s or c over a grid");
  table_cmd->add_option("subject", table.subject, "s or c")->required()->check(CLI::IsMember({"s", "c"}));
  table_cmd->add_option("--z-grid", table.z_grid, "comma-separated z values")->required();
  table_cmd->add_option("--zeta-grid", table.zeta_grid, "comma-separated zeta values")->required();
  table_cmd->add_option("--tol", table.tol, "absolute tolerance")->capture_default_str();
  table_cmd->add_option("--format", table.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suites");
  verify_cmd->add_option("--suite", verify.suite, "all, lommel, bessel, struve, integrals, scaling")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "lommel", "bessel", "struve", "integrals", "scaling"}));
  verify_cmd->add_option("--tol", verify.tol, "allowed series vs quadrature difference for integrals")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval, out);
    if (poly_cmd->parsed()) return cmd_poly(poly, out);
    if (table_cmd->parsed()) return cmd_table(table, out);
    return cmd_verify(verify, out);
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace besstruve
