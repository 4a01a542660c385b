// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"

#include "golden_values.hpp"
#include "wpl/constant_solver.hpp"
#include "wpl/derived_constants.hpp"
#include "wpl/lp_vector.hpp"
#include "wpl/random_model.hpp"
#include "wpl/scalar_kernel.hpp"
#include "wpl/verification.hpp"

using namespace wpl;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, what);
  if (!ok) ++g_failures;
}

void info(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  std::printf("       ");
  std::vprintf(fmt, args);
  std::printf("\n");
  va_end(args);
}

bool near(double value, double target, double tol) {
  return std::fabs(value - target) <= tol;
}

}  // namespace

int main() {
  // 1. constant at (3/2, 5/2): reference value, minimizer, runtime
  {
    const CliResult r = run_cli("constant --p 1.5 --r 2.5 --json");
    bool ok = r.exit_code == 0;
    double value = 0, argmin = 0;
    if (ok) {
      const json j = json::parse(r.out, nullptr, false);
      ok = !j.is_discarded();
      if (ok) {
        value = j["value"].get<double>();
        argmin = j["argminT"].get<double>();
        ok = near(value, 0.777545, 1e-5) && near(argmin, 0.027307, 5e-4)
             && r.seconds < 0.1;
      }
    }
    report(1, "constant --p 1.5 --r 2.5: 0.777545 +- 1e-5, argmin 0.027307 +- 5e-4, < 0.1 s", ok);
    info("value %.12g argmin %.12g runtime %.3fs exit %d", value, argmin,
         r.seconds, r.exit_code);
  }

  // 2. constant at (7/4, 11/5)
  {
    const CliResult r = run_cli("constant --p 1.75 --r 2.2 --json");
    bool ok = r.exit_code == 0;
    double value = 0, argmin = 0;
    if (ok) {
      const json j = json::parse(r.out, nullptr, false);
      ok = !j.is_discarded();
      if (ok) {
        value = j["value"].get<double>();
        argmin = j["argminT"].get<double>();
        ok = near(value, 0.919875, 1e-5) && near(argmin, 0.0402087, 5e-4);
      }
    }
    report(2, "constant --p 1.75 --r 2.2: 0.919875 +- 1e-5, argmin 0.0402087 +- 5e-4", ok);
    info("value %.12g argmin %.12g", value, argmin);
  }

  // 3. paper-convention upper constant at (5/2, 7/4) via the dual base
  {
    const CliResult r =
        run_cli("constant --p 2.5 --r 1.75 --law uwp --convention paper --json");
    bool ok = r.exit_code == 0;
    double value = 0;
    if (ok) {
      const json j = json::parse(r.out, nullptr, false);
      ok = !j.is_discarded();
      if (ok) {
        value = j["value"].get<double>();
        ok = near(value, 1.15549, 1e-4);
      }
    }
    const double base = minimize_h(5.0 / 3.0, 7.0 / 3.0).value;
    ok = ok && near(base, 0.908148, 1e-5)
         && near(value, std::pow(base, -1.5), 1e-9 * value);
    report(3, "constant --p 2.5 --r 1.75 uwp/paper: 1.15549 +- 1e-4 via base 0.908148 +- 1e-5", ok);
    info("value %.12g base %.12g", value, base);
  }

  // 4. r = 2 closed form and the near-boundary agreement
  {
    bool ok = true;
    double worst = 0.0;
    for (int k = 1; k <= 10; ++k) {
      const double p = 1.0 + k / 10.0;
      const ConstantResult res = minimize_h(p, 2.0);
      ok = ok && res.value == p - 1.0;  // exact closed-form path
      const double near_boundary = eval_h(Params(p, 2.0), 1.0 - 1e-6);
      worst = std::max(worst, std::fabs(near_boundary - (p - 1.0)));
      ok = ok && std::fabs(near_boundary - (p - 1.0)) <= 1e-3;
    }
    report(4, "minimize_h(p,2) = p-1 exactly and h(p,2,1-1e-6) within 1e-3, p in {1.1..2.0}", ok);
    info("worst near-boundary deviation %.3g", worst);
  }

  // 5. closed-form bounds contain the solver value on a 20x20 grid
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      const double p = 1.2 + 0.8 * i / 19.0;
      const double q = p / (p - 1.0);
      for (int k = 0; k < 20 && ok; ++k) {
        const double r = 2.0 + (q - 2.0) * k / 19.0;
        const ConstantResult res = minimize_h(p, r);
        const auto [lo, hi] = constant_bounds(p, r);
        ok = lo <= res.value && res.value <= hi + 1e-10;
      }
    }
    report(5, "(p-1)^{r/2} <= C <= 2^{r/q}-1 + 1e-10 over a 20x20 region grid", ok);
  }

  // 6. monotonicity of h in r
  {
    bool ok = true;
    double worst = 0.0;
    for (double p : {1.2, 1.35, 1.5, 1.65, 1.8}) {
      const double q = p / (p - 1.0);
      for (int k = 0; k + 1 < 11; ++k) {
        const double r1 = 2.0 + (q - 2.0) * k / 10.0;
        const double r2 = 2.0 + (q - 2.0) * (k + 1) / 10.0;
        const Params prm1(p, r1), prm2(p, r2);
        for (int i = 0; i < 50; ++i) {
          const double t = (1.0 - 1e-8) * i / 49.0;
          const double d = eval_h(prm2, t) - eval_h(prm1, t);
          worst = std::min(worst, d);
          ok = ok && d >= -1e-12;
        }
      }
    }
    report(6, "h nondecreasing in r to 1e-12 over 50 t x 10 r-pairs x 5 p-values", ok);
    info("most negative increment %.3g", worst);
  }

  // 7. scalar suite: k nonnegativity and symmetry at five parameter pairs
  {
    bool ok = true;
    const std::pair<double, double> prs[] = {
        {1.5, 2.5}, {1.75, 2.2}, {5.0 / 3.0, 7.0 / 3.0}, {1.25, 2.2}, {2.0, 2.0}};
    for (const auto& [p, r] : prs) {
      const Params prm(p, r);
      const double C = minimize_h(p, r).value;
      for (int i = 0; i <= 2000; ++i) {
        const double t = -10.0 + 20.0 * i / 2000.0;
        ok = ok && eval_k(prm, C, t) >= -1e-10;
      }
      for (int i = 1; i <= 1000; ++i) {
        const double t = 10.0 * i / 1000.0;
        const double lhs = eval_k(prm, C, t);
        const double rhs = std::pow(t, r) * eval_k(prm, C, 1.0 / t);
        ok = ok && std::fabs(lhs - rhs) <= 1e-10 * std::pow(1.0 + t, r);
      }
    }
    report(7, "k >= -1e-10 on [-10,10] and k(t) = |t|^r k(1/t) to 1e-10, 5 parameter pairs", ok);
  }

  // 8. vector law on random pairs plus the optimality witness
  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& [p, r] : {std::pair{1.5, 2.5}, {1.75, 2.2}}) {
      const double C = minimize_h(p, r).value;
      for (int dim : {1, 2, 3, 4, 8}) {
        for (long i = 0; i < 10000; ++i) {
          const auto [x, y] = random_nonzero_pair(
              p, dim, 2024 + static_cast<std::uint64_t>(dim), i);
          const double d =
              wp_defect(x, y, r, C, LawKind::lwp) / wp_scale(x, y, r);
          worst = std::min(worst, d);
          ok = ok && d >= -1e-9;
        }
      }
      double family_min = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 2000; ++i) {
        const double t = 0.999 * i / 2000.0;
        const auto [a, b] = extremal_pair(t, p);
        family_min = std::min(family_min, wp_defect(a, b, r, C * 1.001,
                                                    LawKind::lwp));
      }
      ok = ok && family_min < 0.0;
    }
    report(8, "lwp defect >= -1e-9*scale on 1e4 pairs x dims {1,2,3,4,8}; 1.001*C defeated", ok);
    info("worst normalized defect %.3g", worst);
  }

  // 9. Hanner and Clarkson on seeded samples
  {
    bool ok = true;
    for (double p : {1.25, 1.5, 1.75}) {
      for (long i = 0; i < 10000; ++i) {
        const auto [f, g] = random_pair(p, 4, 31, i);
        ok = ok && hanner_defect(f, g) >= -1e-9 * (hanner_scale(f, g) + 1e-300);
        ok = ok
             && clarkson_defect(f, g) >= -1e-9 * (clarkson_scale(f, g) + 1e-300);
      }
    }
    for (double p : {2.5, 3.0, 4.0}) {
      for (long i = 0; i < 10000; ++i) {
        const auto [f, g] = random_pair(p, 4, 32, i);
        ok = ok
             && clarkson_defect(f, g) >= -1e-9 * (clarkson_scale(f, g) + 1e-300);
      }
    }
    report(9, "Hanner/Clarkson >= -1e-9*scale, p in {1.25,1.5,1.75} and {2.5,3,4}", ok);
  }

  // 10. Pythagorean inequality on projected orthogonal pairs
  {
    bool ok = true;
    const double C = minimize_h(1.5, 2.5).value;
    const std::pair<double, double> cases[] = {
        {2.0, 0.5}, {2.5, C / (std::pow(2.0, 1.5) - 1.0)}};
    for (const auto& [r, K] : cases) {
      for (long i = 0; i < 1000; ++i) {
        const auto [x, z] = random_nonzero_pair(1.5, 4, 71, i);
        const LpVector y = bj_project(x, z);
        const double sc = pythagorean_scale(x, y, r, K);
        ok = ok && pythagorean_defect(x, y, r, K, LawKind::lwp) >= -1e-9 * sc;
      }
    }
    report(10, "Pythagorean defect >= -1e-9*scale for 1e3 projected pairs, (3/2,2) and (3/2,5/2)", ok);
  }

  // 11. dual-convention adjudication against the extremal supremum
  {
    bool ok = true;
    char gaps[2][160];
    int case_idx = 0;
    const std::tuple<double, double, double> cases[] = {
        {2.5, 1.75, 1.0748}, {4.0, 2.0, 3.0}};
    for (const auto& [p, r, s_expected] : cases) {
      double S = 0.0;
      const int n = 10000;
      for (int i = 0; i < n; ++i) {
        const double t = (1.0 - 1e-5) * i / (n - 1);
        S = std::max(S, extremal_required_constant(p, r, t, LawKind::uwp));
      }
      const double c_paper =
          optimal_constant(p, r, LawKind::uwp, DualConvention::paper).value;
      const double c_dual =
          optimal_constant(p, r, LawKind::uwp, DualConvention::duality).value;
      ok = ok && near(S, s_expected, 1e-3);
      ok = ok && c_paper >= S - 1e-6 && c_dual >= S - 1e-6;
      for (long i = 0; i < 10000; ++i) {
        const auto [x, y] = random_nonzero_pair(p, 4, 83, i);
        ok = ok
             && wp_defect(x, y, r, c_dual, LawKind::uwp)
                    >= -1e-9 * wp_scale(x, y, r);
      }
      std::snprintf(gaps[case_idx++], sizeof gaps[0],
                    "(p=%g, r=%g): S %.10g, paper gap %.3g, duality gap %.3g",
                    p, r, S, c_paper - S, c_dual - S);
    }
    report(11, "both convention constants >= extremal sup - 1e-6; uwp holds at the duality constant", ok);
    info("%s", gaps[0]);
    info("%s", gaps[1]);
  }

  // 12. derived constants at p = 2 and p = 3/2
  {
    const auto hilbert = empirical_constants(2.0, 2, 10000, 7);
    const auto p15 = empirical_constants(1.5, 2, 10000, 7);
    const bool ok = near(hilbert.nj_estimate, 1.0, 1e-6)
                    && near(hilbert.james_estimate, golden::kSqrt2, 1e-3)
                    && p15.nj_estimate <= 2.0 + 1e-6
                    && p15.james_estimate <= golden::kJamesBound_15_r2 + 1e-6;
    report(12, "nj(2) = 1 +- 1e-6, james(2) = sqrt2 +- 1e-3; p=1.5 estimates within the (i)/(iii) bounds", ok);
    info("nj(2) %.9g james(2) %.9g nj(1.5) %.9g james(1.5) %.9g",
         hilbert.nj_estimate, hilbert.james_estimate, p15.nj_estimate,
         p15.james_estimate);
  }

  // 13. verify emits byte-identical JSON across runs
  {
    const std::string args =
        "verify --p 1.5 --r 2.5 --dim 3 --samples 2000 --seed 42 --json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty()
                    && a.out == b.out;
    report(13, "two identical `verify` runs produce byte-identical JSON", ok);
  }

  std::printf("%d/13 criteria passed\n", 13 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
