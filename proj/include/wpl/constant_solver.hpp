#pragma once

#include <optional>
#include <utility>

#include "wpl/params.hpp"

namespace wpl {

// How a law constant is obtained.
enum class ConstantForm { unit, minimized_h, dual_power };

// Exponent convention for the dual-power constant on the upper-law side.
// The two disagree except at p = r = 2. `paper` raises the base constant
// to -p/q, the power the optimal-constants classification prints;
// `duality` raises it to -r/r', the power the duality transform yields.
// The extremal-family supremum matches the duality convention.
enum class DualConvention { paper, duality };

// Region tags of the six-case classification.
enum class TheoremCase {
  uwp_unit_r_le_p,  // 1 < p <= 2,  r <= p
  lwp_minimized_h,  // 1 < p <= 2,  2 <= r <= q
  lwp_unit_r_ge_q,  // 1 < p <= 2,  r >= q
  lwp_unit_r_ge_p,  // p >= 2,      r >= p
  uwp_dual_power,   // p >= 2,      q <= r <= 2
  uwp_unit_r_le_q,  // p >= 2,      r <= q
};

struct LawEntry {
  ConstantForm form;
  TheoremCase region;
  std::optional<Params> dual_base;  // (q, r') when form == dual_power
};

struct LawClassification {
  std::optional<LawEntry> lwp;
  std::optional<LawEntry> uwp;
};

enum class SolveMethod { closed_form, grid_golden_newton, dual_power, unit };

struct ConstantResult {
  double value = 0.0;
  std::optional<double> argmin_t;  // 1.0 encodes a boundary-limit minimizer
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  SolveMethod method = SolveMethod::unit;
  int iterations = 0;
  double achieved_tol = 0.0;
};

// Which laws hold at (p, r) and how each constant is obtained. Both slots
// empty only outside every region (r < max(p,2) blocks the lower law,
// r > min(p,2) blocks the upper). Boundary membership is exact comparison
// on the supplied doubles.
LawClassification classify(double p, double r);

// C_{p,r} = inf over t in [0,1) of h(t), for 1 < p <= 2 <= r <= q.
//
// r = 2 short-circuits to the closed form p - 1 (boundary-limit infimum).
// Otherwise a coarse grid scan (geometric refinement near both endpoints)
// brackets the global minimum without assuming unimodality, golden section
// narrows the bracket, and safeguarded Newton steps on the derivative sign
// factor polish the root. `tol` is the acceptance threshold on the value;
// failure to reach it raises ConvergenceError rather than returning a
// silently wrong number.
ConstantResult minimize_h(double p, double r, double tol = 1e-12);

// Optimal constant of the requested law at (p, r): 1 on unit regions,
// minimize_h on the lower-law region, and on the dual-power region
// minimize_h(q, r') raised to -p/q (paper) or -r/r' (duality).
ConstantResult optimal_constant(double p, double r, LawKind law,
                                DualConvention convention = DualConvention::paper,
                                double tol = 1e-12);

// ((p-1)^{r/2}, 2^{r/q} - 1) for 1 < p <= 2 <= r <= q.
std::pair<double, double> constant_bounds(double p, double r);

struct DualTransformResult {
  double exponent;
  LawKind law;
  double constant;
};

// Duality map on (law exponent, law, constant): the exponent conjugates,
// the law flips, and C maps to C^{-r'/r}. Involutive.
DualTransformResult dual_transform(double law_exponent, LawKind law, double C);

const char* to_string(ConstantForm f);
const char* to_string(TheoremCase c);
const char* to_string(SolveMethod m);
const char* to_string(DualConvention c);

}  // namespace wpl
