#include <cinttypes>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpl/constant_solver.hpp"
#include "wpl/derived_constants.hpp"
#include "wpl/scalar_kernel.hpp"
#include "wpl/verification.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuiteFailure = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitUsage = 64;

std::string fmt(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

void print_kv(const char* key, const std::string& value) {
  std::printf("%-12s %s\n", key, value.c_str());
}

struct ConstantArgs {
  double p = 0, r = 0;
  std::string law = "auto";
  std::string convention = "paper";
  double tol = 1e-12;
  bool json = false;
};

int run_constant(const ConstantArgs& a) {
  const wpl::Params prm(a.p, a.r);
  const wpl::LawClassification cls = wpl::classify(a.p, a.r);
  wpl::LawKind law;
  if (a.law == "lwp") {
    law = wpl::LawKind::lwp;
  } else if (a.law == "uwp") {
    law = wpl::LawKind::uwp;
  } else {
    // default to the law whose constant is not identically 1, then to
    // whichever law is granted at all
    if (cls.lwp && cls.lwp->form != wpl::ConstantForm::unit)
      law = wpl::LawKind::lwp;
    else if (cls.uwp && cls.uwp->form != wpl::ConstantForm::unit)
      law = wpl::LawKind::uwp;
    else if (cls.lwp)
      law = wpl::LawKind::lwp;
    else if (cls.uwp)
      law = wpl::LawKind::uwp;
    else
      throw std::domain_error("no weak parallelogram law holds at (p, r)");
  }
  const wpl::DualConvention conv = a.convention == "paper"
                                       ? wpl::DualConvention::paper
                                       : wpl::DualConvention::duality;
  const wpl::ConstantResult res = wpl::optimal_constant(a.p, a.r, law, conv, a.tol);
  if (a.json) {
    ordered_json j{
        {"p", a.p},
        {"r", a.r},
        {"q", prm.q()},
        {"rPrime", prm.r_prime()},
        {"law", wpl::to_string(law)},
        {"convention", wpl::to_string(conv)},
        {"value", res.value},
        {"argminT",
         res.argmin_t ? ordered_json(*res.argmin_t) : ordered_json(nullptr)},
        {"lowerBound", res.lower_bound},
        {"upperBound", res.upper_bound},
        {"method", wpl::to_string(res.method)},
        {"iterations", res.iterations},
        {"achievedTol", res.achieved_tol}};
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    print_kv("p", fmt(a.p));
    print_kv("r", fmt(a.r));
    print_kv("q", fmt(prm.q()));
    print_kv("rPrime", fmt(prm.r_prime()));
    print_kv("law", wpl::to_string(law));
    print_kv("convention", wpl::to_string(conv));
    print_kv("value", fmt(res.value));
    print_kv("argminT", res.argmin_t ? fmt(*res.argmin_t) : "none");
    print_kv("lowerBound", fmt(res.lower_bound));
    print_kv("upperBound", fmt(res.upper_bound));
    print_kv("method", wpl::to_string(res.method));
    print_kv("iterations", std::to_string(res.iterations));
    print_kv("achievedTol", fmt(res.achieved_tol));
  }
  return 0;
}

int run_classify(double p, double r, bool json) {
  const wpl::Params prm(p, r);
  const wpl::LawClassification cls = wpl::classify(p, r);
  if (json) {
    ordered_json j{{"p", p}, {"r", r}, {"q", prm.q()}, {"rPrime", prm.r_prime()}};
    const ordered_json laws = wpl::classification_to_json(cls);
    j["lwp"] = laws["lwp"];
    j["uwp"] = laws["uwp"];
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    const auto show = [](const char* name, const std::optional<wpl::LawEntry>& e) {
      if (!e) {
        std::printf("%-4s absent\n", name);
        return;
      }
      std::printf("%-4s %s (%s)", name, wpl::to_string(e->form),
                  wpl::to_string(e->region));
      if (e->dual_base)
        std::printf(" base p=%s r=%s", fmt(e->dual_base->p()).c_str(),
                    fmt(e->dual_base->r()).c_str());
      std::printf("\n");
    };
    show("lwp", cls.lwp);
    show("uwp", cls.uwp);
  }
  return 0;
}

int run_bounds(double p, double r) {
  const auto [lo, hi] = wpl::constant_bounds(p, r);
  std::printf("lower %s\n", fmt(lo).c_str());
  std::printf("upper %s\n", fmt(hi).c_str());
  return 0;
}

int run_curve(double p, double r, int points, double t_max) {
  if (points < 2) throw std::domain_error("curve: --points must be >= 2");
  if (!(t_max > 0.0 && t_max < 1.0))
    throw std::domain_error("curve: --t-max must lie in (0, 1)");
  const wpl::Params prm(p, r);
  std::printf("t,h\n");
  for (int i = 0; i < points; ++i) {
    const double t = t_max * i / (points - 1);
    std::printf("%.17g,%.17g\n", t, wpl::eval_h(prm, t));
  }
  return 0;
}

int run_verify(const wpl::VerifyConfig& cfg, bool json) {
  const wpl::VerificationReport rep = wpl::run_suite(cfg);
  if (json)
    std::printf("%s\n", wpl::report_to_json(rep).dump(2).c_str());
  else
    std::printf("%s", wpl::report_to_text(rep).c_str());
  return rep.passed ? 0 : kExitSuiteFailure;
}

int run_derived(double p, int dim, long samples, std::uint64_t seed, bool json) {
  const wpl::DerivedConstantsReport rep =
      wpl::empirical_constants(p, dim, samples, seed);
  if (json) {
    ordered_json bounds = ordered_json::array();
    for (const wpl::JamesBound& b : rep.james_upper_bounds)
      bounds.push_back(ordered_json{{"source", b.source},
                                    {"r", b.r},
                                    {"bound", b.bound},
                                    {"assertable", b.assertable}});
    ordered_json j{{"p", rep.p},
                   {"njUpperBound", rep.nj_upper_bound},
                   {"njUpperBoundPaper", rep.nj_upper_bound_paper},
                   {"jamesUpperBounds", bounds},
                   {"njEstimate", rep.nj_estimate},
                   {"jamesEstimate", rep.james_estimate},
                   {"samples", rep.samples},
                   {"dim", rep.dim},
                   {"seed", rep.seed}};
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    print_kv("p", fmt(rep.p));
    print_kv("njUpper", fmt(rep.nj_upper_bound));
    print_kv("njEstimate", fmt(rep.nj_estimate));
    print_kv("jamesEst", fmt(rep.james_estimate));
    for (const wpl::JamesBound& b : rep.james_upper_bounds)
      std::printf("james bound  %-22s r=%-20s %s%s\n", b.source.c_str(),
                  fmt(b.r).c_str(), fmt(b.bound).c_str(),
                  b.assertable ? "" : "  (informational)");
  }
  return 0;
}

int run_table(double p, double r_min, double r_max, int steps) {
  const wpl::Params probe(p, std::max(r_min, 1.0 + 1e-9));
  if (!(p > 1.0 && p <= 2.0))
    throw std::domain_error("table: requires 1 < p <= 2");
  if (!(r_min >= 2.0 && r_max >= r_min && r_max <= probe.q()))
    throw std::domain_error("table: requires 2 <= r-min <= r-max <= q");
  if (steps < 1) throw std::domain_error("table: --steps must be >= 1");
  std::printf("r,constant,argminT,lower,upper\n");
  for (int i = 0; i < steps; ++i) {
    const double r =
        steps == 1 ? r_min : r_min + (r_max - r_min) * i / (steps - 1);
    const wpl::ConstantResult res = wpl::minimize_h(p, r);
    std::printf("%.17g,%.17g,%.17g,%.17g,%.17g\n", r, res.value,
                res.argmin_t.value_or(1.0), res.lower_bound, res.upper_bound);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal weak parallelogram constants for finite-dimensional l^p"};
  app.require_subcommand(1);

  ConstantArgs ca;
  CLI::App* c_cmd = app.add_subcommand("constant", "compute an optimal law constant");
  c_cmd->add_option("--p", ca.p, "space exponent")->required();
  c_cmd->add_option("--r", ca.r, "law exponent")->required();
  c_cmd->add_option("--law", ca.law, "lwp or uwp (default: the sharp law)")
      ->check(CLI::IsMember({"lwp", "uwp"}));
  c_cmd->add_option("--convention", ca.convention, "dual-power exponent convention")
      ->check(CLI::IsMember({"paper", "duality"}));
  c_cmd->add_option("--tol", ca.tol, "value tolerance");
  c_cmd->add_flag("--json", ca.json, "emit JSON");

  double cl_p = 0, cl_r = 0;
  bool cl_json = false;
  CLI::App* cl_cmd = app.add_subcommand("classify", "which laws hold at (p, r)");
  cl_cmd->add_option("--p", cl_p)->required();
  cl_cmd->add_option("--r", cl_r)->required();
  cl_cmd->add_flag("--json", cl_json);

  double b_p = 0, b_r = 0;
  CLI::App* b_cmd = app.add_subcommand("bounds", "closed-form constant bounds");
  b_cmd->add_option("--p", b_p)->required();
  b_cmd->add_option("--r", b_r)->required();

  double cu_p = 0, cu_r = 0, cu_tmax = 0.999;
  int cu_points = 0;
  CLI::App* cu_cmd = app.add_subcommand("curve", "CSV samples of h(t)");
  cu_cmd->add_option("--p", cu_p)->required();
  cu_cmd->add_option("--r", cu_r)->required();
  cu_cmd->add_option("--points", cu_points)->required();
  cu_cmd->add_option("--t-max", cu_tmax);

  wpl::VerifyConfig vc;
  double v_override = 0;
  bool v_json = false;
  CLI::App* v_cmd = app.add_subcommand("verify", "run the inequality suites");
  v_cmd->add_option("--p", vc.p)->required();
  v_cmd->add_option("--r", vc.r)->required();
  v_cmd->add_option("--dim", vc.dim)->required();
  v_cmd->add_option("--samples", vc.samples)->required();
  v_cmd->add_option("--seed", vc.seed)->required();
  v_cmd->add_option("--slack", vc.slack);
  CLI::Option* v_override_opt =
      v_cmd->add_option("--constant", v_override,
                        "override the law constant under test");
  v_cmd->add_flag("--json", v_json);

  double d_p = 0;
  int d_dim = 0;
  long d_samples = 0;
  std::uint64_t d_seed = 0;
  bool d_json = false;
  CLI::App* d_cmd = app.add_subcommand("derived", "NJ and James constants");
  d_cmd->add_option("--p", d_p)->required();
  d_cmd->add_option("--dim", d_dim)->required();
  d_cmd->add_option("--samples", d_samples)->required();
  d_cmd->add_option("--seed", d_seed)->required();
  d_cmd->add_flag("--json", d_json);

  double t_p = 0, t_rmin = 0, t_rmax = 0;
  int t_steps = 0;
  CLI::App* t_cmd = app.add_subcommand("table", "CSV of constants over an r range");
  t_cmd->add_option("--p", t_p)->required();
  t_cmd->add_option("--r-min", t_rmin)->required();
  t_cmd->add_option("--r-max", t_rmax)->required();
  t_cmd->add_option("--steps", t_steps)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_cmd->parsed()) return run_constant(ca);
    if (cl_cmd->parsed()) return run_classify(cl_p, cl_r, cl_json);
    if (b_cmd->parsed()) return run_bounds(b_p, b_r);
    if (cu_cmd->parsed()) return run_curve(cu_p, cu_r, cu_points, cu_tmax);
    if (v_cmd->parsed()) {
      if (v_override_opt->count() > 0) vc.constant_override = v_override;
      return run_verify(vc, v_json);
    }
    if (d_cmd->parsed()) return run_derived(d_p, d_dim, d_samples, d_seed, d_json);
    if (t_cmd->parsed()) return run_table(t_p, t_rmin, t_rmax, t_steps);
  } catch (const wpl::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNonConvergence;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
