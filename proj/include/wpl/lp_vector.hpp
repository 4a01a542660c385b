#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

#include "wpl/params.hpp"

namespace wpl {

// Finite real coordinate vector tagged with its norm exponent p > 1.
// Immutable after construction; binary operations require equal exponent
// and equal dimension.
class LpVector {
 public:
  LpVector(double exponent, Eigen::ArrayXd coords);

  double exponent() const { return p_; }
  const Eigen::ArrayXd& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size(); }

 private:
  double p_;
  Eigen::ArrayXd coords_;
};

// (sum |x_i|^p)^{1/p}
double p_norm(const LpVector& x);

// Weak parallelogram defect of the pair (x, y) at law exponent r and
// constant C. lwp: 2^{r-1}(|x|^r + |y|^r) - |x+y|^r - C|x-y|^r;
// uwp is the negation. The law of the given kind holds at (p, r, C) iff
// the defect is >= 0 for every pair.
double wp_defect(const LpVector& x, const LpVector& y, double r, double C,
                 LawKind kind);

// 2^{r-1}(|x|^r + |y|^r); the normalization scale for defect slack.
double wp_scale(const LpVector& x, const LpVector& y, double r);

// a = t e0 + e1, b = e0 + t e1 embedded in the given dimension. Along this
// family the lower-law defect vanishes exactly when C equals h(t).
std::pair<LpVector, LpVector> extremal_pair(double t, double p,
                                            Eigen::Index dim = 2);

// The constant that makes the weak parallelogram defect of
// extremal_pair(t) vanish, computed through the vector norms:
// (2^{r-1}(|a|^r + |b|^r) - |a+b|^r) / |a-b|^r. Algebraically this equals
// eval_h(p, r, t); the two routes cross-check each other. For the lower
// law the infimum over t caps admissible constants from above, for the
// upper law the supremum caps them from below.
double extremal_required_constant(double p, double r, double t, LawKind kind);

// |F+G|^p + |F-G|^p - (|F|+|G|)^p - ||F|-|G||^p, nonnegative for
// 1 < p <= 2 (the only direction used here; p > 2 is rejected).
double hanner_defect(const LpVector& F, const LpVector& G);
double hanner_scale(const LpVector& F, const LpVector& G);

// For 1 < p <= 2: |f+g|^p + |f-g|^p - 2^{p-1}(|f|^p + |g|^p); for p >= 2
// the negation. Nonnegative in both regimes.
double clarkson_defect(const LpVector& f, const LpVector& g);
double clarkson_scale(const LpVector& f, const LpVector& g);

// Component of z Birkhoff-James-orthogonal to x: y = z - c x with
// c = <z, phi> / <x, phi>, phi_i = sgn(x_i)|x_i|^{p-1} the norming
// direction of the (smooth) space.
LpVector bj_project(const LpVector& x, const LpVector& z);

// max(0, |x| - inf_t |x + t y|). Zero iff x is Birkhoff-James-orthogonal
// to y. The inner objective is convex in t: bracket by doubling, then
// golden section.
double bj_violation(const LpVector& x, const LpVector& y);

// Pythagorean defect for a Birkhoff-James-orthogonal pair. lwp:
// |x+y|^r - |x|^r - K|y|^r; uwp: |x|^r + K|y|^r - |x+y|^r. Nonnegative
// when K = C/(2^{r-1}-1) with C the corresponding law constant. Rejects
// pairs violating orthogonality beyond 1e-8 |x|.
double pythagorean_defect(const LpVector& x, const LpVector& y, double r,
                          double K, LawKind kind);
double pythagorean_scale(const LpVector& x, const LpVector& y, double r,
                         double K);

// Raised when the orthogonality precondition of pythagorean_defect fails;
// carries the measured violation.
class OrthogonalityError : public std::domain_error {
 public:
  OrthogonalityError(double violation, double tolerance);
  double violation() const { return violation_; }
  double tolerance() const { return tolerance_; }

 private:
  double violation_;
  double tolerance_;
};

}  // namespace wpl
