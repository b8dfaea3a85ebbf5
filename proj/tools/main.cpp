// Command-line front end: series continuation, coefficient interpolants,
// growth estimation, and the kernel bound constants.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anacont/catalog.hpp"
#include "anacont/continuation.hpp"
#include "anacont/contour.hpp"
#include "anacont/errors.hpp"
#include "anacont/expr.hpp"
#include "anacont/growth.hpp"
#include "anacont/interpolant.hpp"
#include "anacont/kernel.hpp"

namespace {

using anacont::Cx;
using nlohmann::json;

json cx_to_json(Cx v) { return json::array({v.real(), v.imag()}); }

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

int thread_count_from_env() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  n = std::min(n, 8u);
  if (const char* env = std::getenv("CONTINUE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(std::min<long>(v, 64));
  }
  return static_cast<int>(n);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) {
    throw anacont::ParameterError("cannot open output file '" + out_path +
                                  "'");
  }
  f << j.dump(2) << "\n";
}

// --------------------------------------------------------------------------

struct EvalArgs {
  std::string series = "builtin:geometric";
  double re = 0.0, im = 0.0;
  int m = -1;
  double theta = std::numeric_limits<double>::quiet_NaN();
  double quad_tol = 1e-10;
  double trunc_tol = 1e-12;
  std::size_t budget = 0;
  bool dump_contour = false;
  std::string out;
};

int run_eval(const EvalArgs& a) {
  const anacont::SeriesSpec spec = anacont::load_series_spec(a.series);
  const anacont::Series s = anacont::to_series(spec);
  anacont::ContinuationConfig cfg;
  cfg.m = a.m;
  cfg.theta = a.theta;
  cfg.quad_tol = a.quad_tol;
  cfg.trunc_tol = a.trunc_tol;
  cfg.max_evals_per_piece = a.budget;
  const Cx z(a.re, a.im);
  const anacont::ContinuationResult r = anacont::continue_at(s, z, cfg);
  json j;
  j["series"] = spec.label;
  j["z"] = cx_to_json(z);
  j["value"] = cx_to_json(r.value);
  j["err_estimate"] = r.err_estimate;
  j["mode"] = r.mode;
  j["m"] = r.m;
  j["theta"] = r.theta;
  j["evals"] = r.evals;
  j["cross_check_dev"] = r.cross_check_dev;
  if (a.dump_contour) {
    if (r.mode == "series") {
      j["contour"] = nullptr;
    } else {
      const anacont::TailIntegral t = anacont::tail_integral(s, z, cfg);
      const anacont::Contour c = anacont::gamma_m_contour(t.m, t.theta);
      j["contour"] = json::parse(anacont::contour_to_json(c, t.ray_truncation));
    }
  }
  emit(j, a.out);
  return 0;
}

// --------------------------------------------------------------------------

struct GridArgs {
  std::string series = "builtin:geometric";
  double re0 = -2.0, re1 = 2.0;
  double im0 = -2.0, im1 = 2.0;
  int nre = 9, nim = 9;
  int m = -1;
  double theta = std::numeric_limits<double>::quiet_NaN();
  double quad_tol = 1e-8;
  std::string out;
};

int run_grid(const GridArgs& a) {
  if (a.nre < 1 || a.nim < 1) {
    throw anacont::ParameterError("grid: nre and nim must be >= 1");
  }
  const anacont::Series s = anacont::to_series(anacont::load_series_spec(a.series));
  anacont::ContinuationConfig cfg;
  cfg.m = a.m;
  cfg.theta = a.theta;
  cfg.quad_tol = a.quad_tol;

  struct Row {
    double re = 0.0, im = 0.0;
    double fre = std::numeric_limits<double>::quiet_NaN();
    double fim = std::numeric_limits<double>::quiet_NaN();
    double err = std::numeric_limits<double>::quiet_NaN();
  };
  const int total = a.nre * a.nim;
  std::vector<Row> rows(total);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int idx = next.fetch_add(1);
      if (idx >= total) return;
      const int i = idx / a.nim;
      const int k = idx % a.nim;
      Row& row = rows[idx];
      row.re = a.nre == 1 ? a.re0 : a.re0 + (a.re1 - a.re0) * i / (a.nre - 1);
      row.im = a.nim == 1 ? a.im0 : a.im0 + (a.im1 - a.im0) * k / (a.nim - 1);
      try {
        const anacont::ContinuationResult r =
            anacont::continue_at(s, Cx(row.re, row.im), cfg);
        row.fre = r.value.real();
        row.fim = r.value.imag();
        row.err = r.err_estimate;
      } catch (const std::exception&) {
        // excluded point (cut, pole, or unconverged): leave the nan row
      }
    }
  };
  const int nthreads = std::min(thread_count_from_env(), total);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::FILE* f = stdout;
  if (!a.out.empty() && a.out != "-") {
    f = std::fopen(a.out.c_str(), "w");
    if (!f) {
      throw anacont::ParameterError("cannot open output file '" + a.out + "'");
    }
  }
  std::fprintf(f, "re,im,F_re,F_im,err\n");
  for (const Row& row : rows) {
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", row.re, row.im, row.fre,
                 row.fim, row.err);
  }
  if (f != stdout) std::fclose(f);
  return 0;
}

// --------------------------------------------------------------------------

struct VerifyArgs {
  std::string series = "builtin:geometric";
  double tol = 1e-7;
  int m = -1;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const anacont::SeriesSpec spec = anacont::load_series_spec(a.series);
  const anacont::Series s = anacont::to_series(spec);
  anacont::ContinuationConfig cfg;
  cfg.m = a.m;

  std::optional<anacont::FunctionExpr> closed;
  constexpr const char* kPrefix = "builtin:";
  if (a.series.rfind(kPrefix, 0) == 0) {
    closed = anacont::find_builtin(a.series.substr(8)).closed_form;
  }

  json checks = json::array();
  bool ok = true;
  double worst = 0.0;

  // Inside the disc: contour value against the convergent series.
  for (int k = 0; k < 8; ++k) {
    const double ang = (2 * k + 1) * anacont::kPi / 8.0;
    const Cx z = 0.5 * std::exp(Cx(0.0, ang));
    const anacont::ContinuationResult r = anacont::continue_at(s, z, cfg);
    const Cx direct = anacont::direct_series_sum(s, z);
    const double dev = std::abs(r.value - direct);
    worst = std::max(worst, dev);
    ok = ok && dev <= a.tol;
    checks.push_back({{"z", cx_to_json(z)},
                      {"against", "series"},
                      {"dev", dev},
                      {"pass", dev <= a.tol}});
  }
  // Outside the disc: contour value against the closed form, if known.
  if (closed) {
    for (int k = 0; k < 8; ++k) {
      const double ang = (2 * k + 1) * anacont::kPi / 8.0;
      const Cx z = 2.0 * std::exp(Cx(0.0, ang));
      const anacont::ContinuationResult r = anacont::continue_at(s, z, cfg);
      const Cx ref = closed->eval(z);
      const double dev = std::abs(r.value - ref);
      worst = std::max(worst, dev);
      ok = ok && dev <= a.tol;
      checks.push_back({{"z", cx_to_json(z)},
                        {"against", "closed_form"},
                        {"dev", dev},
                        {"pass", dev <= a.tol}});
    }
  }

  json j;
  j["series"] = spec.label;
  j["tol"] = a.tol;
  j["worst_dev"] = worst;
  j["ok"] = ok;
  j["checks"] = checks;
  emit(j, a.out);
  return ok ? 0 : 2;
}

// --------------------------------------------------------------------------

struct GrowthArgs {
  std::string expr;
  double rmin = 1.0, rmax = 40.0;
  int count = 60;
  std::string spacing = "geometric";
  double sector_lo = -anacont::kPi, sector_hi = anacont::kPi;
  std::string angles = "0";
  double tail_fraction = 0.25;
  std::string out;
};

int run_growth(const GrowthArgs& a) {
  const anacont::FunctionExpr F = anacont::FunctionExpr::parse(a.expr);
  anacont::RadialSchedule sched;
  sched.r_min = a.rmin;
  sched.r_max = a.rmax;
  sched.count = a.count;
  if (a.spacing == "geometric") {
    sched.spacing = anacont::Spacing::geometric;
  } else if (a.spacing == "linear") {
    sched.spacing = anacont::Spacing::linear;
  } else {
    throw anacont::ParameterError("growth: spacing must be geometric|linear");
  }
  if (!F.is_entire()) {
    throw anacont::ParameterError(
        "growth: expression must be entire (no cuts or poles)");
  }
  const anacont::GrowthReport rep = anacont::growth_report(
      F.fn(), a.sector_lo, a.sector_hi, sched, parse_double_list(a.angles),
      a.tail_fraction);
  json j;
  j["expr"] = F.render();
  j["et_estimate"] = rep.et_estimate;
  j["iet_estimate"] = rep.iet_estimate;
  j["order_estimate"] = rep.order_estimate;
  json ind = json::array();
  for (const auto& sample : rep.indicator_samples) {
    ind.push_back({{"theta", sample.theta}, {"value", sample.value}});
  }
  j["indicator_samples"] = ind;
  j["schedule"] = {{"r_min", sched.r_min},
                   {"r_max", sched.r_max},
                   {"count", sched.count},
                   {"spacing", a.spacing}};
  j["tail_fraction"] = rep.tail_fraction;
  j["sector"] = {a.sector_lo, a.sector_hi};
  emit(j, a.out);
  return 0;
}

// --------------------------------------------------------------------------

struct InterpArgs {
  std::string g;
  double eta = 0.4;
  double M = 2.0;
  double theta = 0.0;
  double r = 0.5;
  double re = 0.0, im = 0.0;
  double quad_tol = 1e-9;
  double delta = 0.0;  // > 0 switches to the deformed-boundary formula
  std::string out;
};

int run_interp(const InterpArgs& a) {
  const anacont::FunctionExpr G = anacont::FunctionExpr::parse(a.g);
  const Cx z(a.re, a.im);
  json j;
  j["g"] = G.render();
  j["z"] = cx_to_json(z);
  anacont::InterpolantValue v;
  if (a.delta > 0.0) {
    v = anacont::phi_deformed(G.fn(), a.delta, z, a.quad_tol, a.eta);
    j["method"] = "deformed_boundary";
    j["delta"] = a.delta;
  } else {
    anacont::BoundaryFn bf{G.fn(), G.is_entire(), G.render()};
    anacont::DecayCertificate cert;
    cert.M = a.M;
    cert.eta = a.eta;
    cert.theta_ray = a.theta;
    anacont::InterpolantConfig cfg;
    cfg.r = a.r;
    cfg.theta = a.theta;
    cfg.quad_tol = a.quad_tol;
    v = anacont::phi_interpolant(bf, cert, z, cfg);
    j["method"] = "circle_plus_ray";
    j["theta"] = a.theta;
  }
  j["value"] = cx_to_json(v.value);
  j["err_estimate"] = v.err_estimate;
  j["r_used"] = v.r_used;
  j["ray_truncation"] = v.ray_truncation;
  j["evals"] = v.evals;
  emit(j, a.out);
  return 0;
}

// --------------------------------------------------------------------------

struct InterpCheckArgs {
  std::string g;
  double eta = 0.4;
  double M = 2.0;
  double theta = 0.0;
  double re = 1.5, im = 0.5;
  std::string r_list = "0.3,0.5,0.7";
  double tol = 1e-6;
  double quad_tol = 1e-9;
  std::string out;
};

int run_interp_check(const InterpCheckArgs& a) {
  const anacont::FunctionExpr G = anacont::FunctionExpr::parse(a.g);
  anacont::BoundaryFn bf{G.fn(), G.is_entire(), G.render()};
  anacont::DecayCertificate cert;
  cert.M = a.M;
  cert.eta = a.eta;
  cert.theta_ray = a.theta;
  const std::vector<double> rs = parse_double_list(a.r_list);
  const double dev = anacont::check_r_independence(bf, cert, a.theta,
                                                   Cx(a.re, a.im), rs,
                                                   a.quad_tol);
  json j;
  j["g"] = G.render();
  j["z"] = cx_to_json(Cx(a.re, a.im));
  j["r_list"] = rs;
  j["max_dev"] = dev;
  j["tol"] = a.tol;
  j["ok"] = dev <= a.tol;
  emit(j, a.out);
  return dev <= a.tol ? 0 : 2;
}

// --------------------------------------------------------------------------

struct ConstantsArgs {
  double r_exclusion = 0.25;
  std::string out;
};

int run_constants(const ConstantsArgs& a) {
  const anacont::KernelBoundConstants k =
      anacont::reciprocal_bound_constant(a.r_exclusion);
  json j;
  j["r_exclusion"] = k.r_exclusion;
  j["c_far"] = k.c_far;
  j["c_near"] = k.c_near;
  j["c"] = k.c;
  emit(j, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "anacont: analytic continuation of power series beyond the unit disc, "
      "entire coefficient interpolants, and growth-scale estimation"};
  app.require_subcommand(1);

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand(
      "eval", "continue a series at one point via head sum + tail contour");
  eval->add_option("--series", ea.series,
                   "builtin:<label> or a JSON spec file");
  eval->add_option("--re", ea.re, "Re z")->required();
  eval->add_option("--im", ea.im, "Im z");
  eval->add_option("--m", ea.m, "head length (-1 = auto)");
  eval->add_option("--theta", ea.theta, "contour angle (default auto)");
  eval->add_option("--quad-tol", ea.quad_tol, "quadrature tolerance");
  eval->add_option("--trunc-tol", ea.trunc_tol, "ray truncation tolerance");
  eval->add_option("--budget", ea.budget,
                   "max integrand evaluations per contour piece (0 = auto)");
  eval->add_flag("--dump-contour", ea.dump_contour,
                 "include the tail contour description");
  eval->add_option("--out", ea.out, "output file (default stdout)");

  GridArgs ga;
  CLI::App* grid = app.add_subcommand(
      "grid", "continue a series over a rectangular grid, CSV output");
  grid->add_option("--series", ga.series, "builtin:<label> or JSON spec file");
  grid->add_option("--re0", ga.re0, "first Re");
  grid->add_option("--re1", ga.re1, "last Re");
  grid->add_option("--nre", ga.nre, "number of Re samples");
  grid->add_option("--im0", ga.im0, "first Im");
  grid->add_option("--im1", ga.im1, "last Im");
  grid->add_option("--nim", ga.nim, "number of Im samples");
  grid->add_option("--m", ga.m, "head length (-1 = auto)");
  grid->add_option("--theta", ga.theta, "contour angle (default auto)");
  grid->add_option("--quad-tol", ga.quad_tol, "quadrature tolerance");
  grid->add_option("--out", ga.out, "output CSV file (default stdout)");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "check contour continuation against the series inside the disc (and "
      "the closed form outside, for builtins)");
  verify->add_option("--series", va.series, "builtin:<label> or JSON file");
  verify->add_option("--tol", va.tol, "acceptance tolerance");
  verify->add_option("--m", va.m, "head length (-1 = auto)");
  verify->add_option("--out", va.out, "output file (default stdout)");

  GrowthArgs wa;
  CLI::App* growth = app.add_subcommand(
      "growth", "growth scales of an entire expression from finite samples");
  growth->add_option("--expr", wa.expr, "entire expression in z")->required();
  growth->add_option("--rmin", wa.rmin, "smallest radius");
  growth->add_option("--rmax", wa.rmax, "largest radius");
  growth->add_option("--count", wa.count, "number of radii");
  growth->add_option("--spacing", wa.spacing, "geometric|linear");
  growth->add_option("--sector-lo", wa.sector_lo, "sector lower angle");
  growth->add_option("--sector-hi", wa.sector_hi, "sector upper angle");
  growth->add_option("--angles", wa.angles,
                     "comma-separated indicator angles");
  growth->add_option("--tail-fraction", wa.tail_fraction,
                     "top fraction of radii used");
  growth->add_option("--out", wa.out, "output file (default stdout)");

  InterpArgs ia;
  CLI::App* interp = app.add_subcommand(
      "interp", "entire coefficient interpolant of a boundary function");
  interp->add_option("--g", ia.g, "boundary function expression")->required();
  interp->add_option("--eta", ia.eta, "decay exponent in (0, 1/2)");
  interp->add_option("--M", ia.M, "decay constant");
  interp->add_option("--theta", ia.theta, "ray angle in [-pi, pi)");
  interp->add_option("--r", ia.r, "circle radius");
  interp->add_option("--re", ia.re, "Re z")->required();
  interp->add_option("--im", ia.im, "Im z");
  interp->add_option("--quad-tol", ia.quad_tol, "quadrature tolerance");
  interp->add_option("--delta", ia.delta,
                     "use the deformed-boundary formula with this opening");
  interp->add_option("--out", ia.out, "output file (default stdout)");

  InterpCheckArgs ca;
  CLI::App* icheck = app.add_subcommand(
      "interp-check", "radius independence check of the interpolant");
  icheck->add_option("--g", ca.g, "boundary function expression")->required();
  icheck->add_option("--eta", ca.eta, "decay exponent in (0, 1/2)");
  icheck->add_option("--M", ca.M, "decay constant");
  icheck->add_option("--theta", ca.theta, "ray angle in [-pi, pi)");
  icheck->add_option("--re", ca.re, "Re z");
  icheck->add_option("--im", ca.im, "Im z");
  icheck->add_option("--r-list", ca.r_list, "comma-separated radii");
  icheck->add_option("--tol", ca.tol, "acceptance tolerance");
  icheck->add_option("--quad-tol", ca.quad_tol, "quadrature tolerance");
  icheck->add_option("--out", ca.out, "output file (default stdout)");

  ConstantsArgs ka;
  CLI::App* constants = app.add_subcommand(
      "constants", "kernel reciprocal bound constants");
  constants->add_option("--r-exclusion", ka.r_exclusion,
                        "integer exclusion radius in (0, 1/2)");
  constants->add_option("--out", ka.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  try {
    if (eval->parsed()) return run_eval(ea);
    if (grid->parsed()) return run_grid(ga);
    if (verify->parsed()) return run_verify(va);
    if (growth->parsed()) return run_growth(wa);
    if (interp->parsed()) return run_interp(ia);
    if (icheck->parsed()) return run_interp_check(ca);
    if (constants->parsed()) return run_constants(ka);
  } catch (const anacont::AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 2;
  } catch (const anacont::ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const anacont::CertificateError& e) {
    std::cerr << "certificate error: " << e.what() << "\n";
    return 2;
  } catch (const anacont::SyntaxError& e) {
    std::cerr << "syntax error at position " << e.position << ": " << e.what()
              << "\n";
    return 3;
  } catch (const anacont::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const anacont::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const anacont::EvaluationError& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
