#include "wpl/constant_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "wpl/scalar_kernel.hpp"

namespace wpl {
namespace {

using detail::xpow;

// d/dt of the derivative sign factor g. Only used by the Newton polish,
// which operates strictly inside a positive bracket (t^{p-2} blows up at 0).
double sign_factor_derivative(const Params& prm, double t) {
  const long double p = prm.p();
  const long double r = prm.r();
  const long double tl = t;
  return static_cast<double>(
      xpow(2.0L, r - r / p) * xpow(1.0L + xpow(tl, p), r / p - 2.0L)
          * ((r - p) * xpow(tl, p - 1.0L) * (1.0L + xpow(tl, p - 1.0L))
             + (p - 1.0L) * xpow(tl, p - 2.0L) * (1.0L + xpow(tl, p)))
      - 2.0L * (r - 1.0L) * xpow(1.0L + tl, r - 2.0L));
}

// Uniform scan grid with geometric refinement near both endpoints. The
// minimum can sit arbitrarily close to either end (t -> 0 as r -> q,
// t -> 1 as r -> 2), so the tails get log-spaced points.
std::vector<double> scan_grid(int n) {
  const int tail = 64;
  const int head = 32;
  const int uni = std::max(16, n - tail - head);
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(uni + tail + head));
  for (int i = 0; i < uni; ++i)
    g.push_back(0.999 * static_cast<double>(i) / (uni - 1));
  for (int i = 0; i < tail; ++i) {
    const double eps = 1e-3 * std::pow(1e-4, static_cast<double>(i) / (tail - 1));
    g.push_back(1.0 - eps);  // eps sweeps 1e-3 down to 1e-7
  }
  for (int i = 0; i < head; ++i)
    g.push_back(1e-7 * std::pow(1e4, static_cast<double>(i) / (head - 1)));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace

LawClassification classify(double p, double r) {
  const Params prm(p, r);
  const double q = prm.q();
  LawClassification out;
  if (p <= 2.0) {
    if (r <= p)
      out.uwp = LawEntry{ConstantForm::unit, TheoremCase::uwp_unit_r_le_p, std::nullopt};
    if (r >= 2.0) {
      if (r <= q)
        out.lwp = LawEntry{ConstantForm::minimized_h, TheoremCase::lwp_minimized_h,
                           std::nullopt};
      else
        out.lwp = LawEntry{ConstantForm::unit, TheoremCase::lwp_unit_r_ge_q,
                           std::nullopt};
    }
  } else {
    if (r >= p)
      out.lwp = LawEntry{ConstantForm::unit, TheoremCase::lwp_unit_r_ge_p,
                         std::nullopt};
    if (r <= 2.0) {
      if (r >= q)
        out.uwp = LawEntry{ConstantForm::dual_power, TheoremCase::uwp_dual_power,
                           Params(q, prm.r_prime())};
      else
        out.uwp = LawEntry{ConstantForm::unit, TheoremCase::uwp_unit_r_le_q,
                           std::nullopt};
    }
  }
  return out;
}

ConstantResult minimize_h(double p, double r, double tol) {
  const Params prm(p, r);
  if (!(p <= 2.0 && r >= 2.0 && r <= prm.q()))
    throw std::domain_error("minimize_h: requires 1 < p <= 2 <= r <= q");
  if (!(tol > 0.0)) throw std::domain_error("minimize_h: tol must be positive");

  const auto [lo_bound, hi_bound] = constant_bounds(p, r);
  ConstantResult res;
  res.lower_bound = lo_bound;
  res.upper_bound = hi_bound;

  if (r == 2.0) {
    // Bynum-Drew: the infimum is the boundary limit p - 1.
    res.value = p - 1.0;
    res.argmin_t = 1.0;
    res.method = SolveMethod::closed_form;
    return res;
  }

  const auto h = [&prm](double t) { return eval_h(prm, t); };
  const auto g = [&prm](double t) { return h_prime_sign_factor(prm, t); };

  // Coarse scan brackets the global minimum without a unimodality
  // assumption.
  const std::vector<double> grid = scan_grid(4096);
  std::size_t best = 0;
  double best_f = h(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double f = h(grid[i]);
    if (f < best_f) {
      best_f = f;
      best = i;
    }
  }
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[std::min(best + 1, grid.size() - 1)];

  // Golden section to bracket width 1e-8, tracking the bracket.
  constexpr double kInvPhi = 0.61803398874989485;
  constexpr double kInvPhi2 = 0.38196601125010515;
  double x1 = a + kInvPhi2 * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = h(x1);
  double f2 = h(x2);
  int iters = 0;
  while (b - a > 1e-8 && iters < 120) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = a + kInvPhi2 * (b - a);
      f1 = h(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = h(x2);
    }
    ++iters;
  }
  double t_star = f1 <= f2 ? x1 : x2;
  double f_star = std::min(f1, f2);

  // Newton polish on the sign factor when the bracket straddles its root;
  // iterates leaving the bracket fall back to bisection.
  double blo = a, bhi = b;
  bool newton_converged = false;
  double newton_step = 0.0;
  if (g(blo) < 0.0 && g(bhi) > 0.0) {
    double x = std::clamp(t_star, blo, bhi);
    for (int k = 0; k < 20 && iters < 200; ++k, ++iters) {
      const double gx = g(x);
      if (gx < 0.0)
        blo = x;
      else
        bhi = x;
      const double dgx = sign_factor_derivative(prm, x);
      double xn = (std::isfinite(dgx) && dgx != 0.0) ? x - gx / dgx : 0.5 * (blo + bhi);
      if (!(xn > blo && xn < bhi)) xn = 0.5 * (blo + bhi);
      newton_step = std::fabs(xn - x);
      x = xn;
      if (newton_step <= 1e-12) {
        newton_converged = true;
        break;
      }
    }
    const double fx = h(x);
    if (fx <= f_star) {
      t_star = x;
      f_star = fx;
    }
  }

  // Ties prefer the smaller t; the relevant tie is t = 0 at r = q, where
  // the sign factor vanishes at the origin.
  const double f0 = h(0.0);
  const double tie_tol = std::max(1e-14 * std::fabs(f_star), 1e-16);
  const bool boundary_min = f0 <= f_star + tie_tol;
  if (boundary_min) {
    t_star = 0.0;
    f_star = f0;
  }

  // Value uncertainty. For a boundary minimum the probes never went below
  // h(0) beyond the tie tolerance. For interior minima the t-uncertainty
  // is the converged Newton step (else the bracket width); the value error
  // is measured by bumping t by that amount.
  const double noise_floor = 4.0 * 2.220446049250313e-16 * std::fabs(f_star);
  double achieved = noise_floor;
  if (boundary_min) {
    achieved = std::max(noise_floor, tie_tol);
  } else {
    const double t_err = newton_converged ? std::max(newton_step, 1e-12)
                                          : std::max(bhi - blo, 1e-12);
    const double lo_probe = std::max(0.0, t_star - t_err);
    const double hi_probe = std::min(1.0 - 1e-9, t_star + t_err);
    const double bump = std::max(h(lo_probe), h(hi_probe)) - f_star;
    achieved = std::max(noise_floor, std::max(bump, 0.0));
  }

  res.value = f_star;
  res.argmin_t = t_star;
  res.method = SolveMethod::grid_golden_newton;
  res.iterations = iters;
  res.achieved_tol = achieved;
  if (!(res.achieved_tol <= tol)) {
    std::ostringstream os;
    os << "minimize_h: did not reach tol=" << tol << " at (p=" << p << ", r=" << r
       << "): bracket [" << blo << ", " << bhi << "], value " << f_star
       << ", achieved " << res.achieved_tol << " after " << iters << " refinements";
    throw ConvergenceError(os.str());
  }
  return res;
}

ConstantResult optimal_constant(double p, double r, LawKind law,
                                DualConvention convention, double tol) {
  const LawClassification cls = classify(p, r);
  const std::optional<LawEntry>& entry = law == LawKind::lwp ? cls.lwp : cls.uwp;
  if (!entry) {
    std::ostringstream os;
    os << "optimal_constant: no " << to_string(law) << " law holds at (p=" << p
       << ", r=" << r << ")";
    throw std::domain_error(os.str());
  }
  switch (entry->form) {
    case ConstantForm::unit: {
      ConstantResult res;
      res.value = 1.0;
      res.lower_bound = 1.0;
      res.upper_bound = 1.0;
      res.method = SolveMethod::unit;
      return res;
    }
    case ConstantForm::minimized_h:
      return minimize_h(p, r, tol);
    case ConstantForm::dual_power: {
      const Params& base = *entry->dual_base;
      const ConstantResult b = minimize_h(base.p(), base.r(), tol);
      // -p/q = -(p-1); -r/r' = -(r-1)
      const double expo =
          convention == DualConvention::paper ? -(p - 1.0) : -(r - 1.0);
      ConstantResult res;
      res.value = std::pow(b.value, expo);
      res.lower_bound = std::pow(b.upper_bound, expo);
      res.upper_bound = std::pow(b.lower_bound, expo);
      res.method = SolveMethod::dual_power;
      res.iterations = b.iterations;
      res.achieved_tol =
          b.achieved_tol * std::fabs(expo) * res.value / std::max(b.value, 1e-300);
      return res;
    }
  }
  throw std::logic_error("optimal_constant: unreachable");
}

std::pair<double, double> constant_bounds(double p, double r) {
  const Params prm(p, r);
  if (!(p <= 2.0 && r >= 2.0 && r <= prm.q()))
    throw std::domain_error("constant_bounds: requires 1 < p <= 2 <= r <= q");
  const long double pl = p;
  const long double rl = r;
  const double lower = static_cast<double>(xpow(pl - 1.0L, rl / 2.0L));
  const double upper = static_cast<double>(xpow(2.0L, rl - rl / pl) - 1.0L);
  return {lower, upper};
}

DualTransformResult dual_transform(double law_exponent, LawKind law, double C) {
  if (!(std::isfinite(law_exponent) && law_exponent > 1.0))
    throw std::domain_error("dual_transform: law exponent must be finite and > 1");
  if (!(std::isfinite(C) && C > 0.0))
    throw std::domain_error("dual_transform: constant must be positive");
  const double dual_exponent = law_exponent / (law_exponent - 1.0);
  return {dual_exponent, law == LawKind::lwp ? LawKind::uwp : LawKind::lwp,
          std::pow(C, -dual_exponent / law_exponent)};
}

const char* to_string(ConstantForm f) {
  switch (f) {
    case ConstantForm::unit: return "Unit";
    case ConstantForm::minimized_h: return "MinimizedH";
    case ConstantForm::dual_power: return "DualPower";
  }
  return "?";
}

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::uwp_unit_r_le_p: return "uwp-unit-r<=p";
    case TheoremCase::lwp_minimized_h: return "lwp-minimized-h";
    case TheoremCase::lwp_unit_r_ge_q: return "lwp-unit-r>=q";
    case TheoremCase::lwp_unit_r_ge_p: return "lwp-unit-r>=p";
    case TheoremCase::uwp_dual_power: return "uwp-dual-power";
    case TheoremCase::uwp_unit_r_le_q: return "uwp-unit-r<=q";
  }
  return "?";
}

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::closed_form: return "closed-form";
    case SolveMethod::grid_golden_newton: return "grid-golden-newton";
    case SolveMethod::dual_power: return "dual-power";
    case SolveMethod::unit: return "unit";
  }
  return "?";
}

const char* to_string(DualConvention c) {
  return c == DualConvention::paper ? "paper" : "duality";
}

}  // namespace wpl
