#pragma once

#include <cmath>
#include <utility>

namespace wpl {

struct Bracket {
  double lo;
  double hi;
};

// Golden-section minimization on [lo, hi]. Narrows the bracket to
// width_tol (absolute, clamped at floating-point resolution) and returns
// the best interior probe. Assumes f is unimodal on the bracket.
template <class F>
double golden_section_min(F&& f, double lo, double hi, double width_tol,
                          int* evals = nullptr) {
  constexpr double kInvPhi = 0.61803398874989485;
  constexpr double kInvPhi2 = 0.38196601125010515;
  double a = lo, b = hi;
  double x1 = a + kInvPhi2 * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int n = 2;
  while (b - a > width_tol + 4e-16 * (std::fabs(a) + std::fabs(b))) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = a + kInvPhi2 * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
    if (++n > 2000) break;
  }
  if (evals) *evals += n;
  return f1 <= f2 ? x1 : x2;
}

// Step-doubling bracket expansion for a convex f that grows at both
// infinities: widens [a, c] around the seed until the midpoint is no worse
// than both ends, so the bracket is guaranteed to contain the minimum.
template <class F>
Bracket expand_bracket_convex(F&& f, double a, double c) {
  double m = 0.5 * (a + c);
  double fa = f(a), fm = f(m), fc = f(c);
  double step = c - a;
  int guard = 0;
  while (!(fm <= fa && fm <= fc)) {
    if (fa < fc) {
      c = m;
      fc = fm;
      m = a;
      fm = fa;
      a -= step;
      fa = f(a);
    } else {
      a = m;
      fa = fm;
      m = c;
      fm = fc;
      c += step;
      fc = f(c);
    }
    step *= 2.0;
    if (++guard > 200) break;
  }
  return {a, c};
}

// Golden-section maximization, returning the best probe.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double width_tol,
                          int* evals = nullptr) {
  auto neg = [&f](double t) { return -f(t); };
  return golden_section_min(neg, lo, hi, width_tol, evals);
}

}  // namespace wpl
