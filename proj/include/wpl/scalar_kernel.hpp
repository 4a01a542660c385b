#pragma once

#include "wpl/params.hpp"

namespace wpl {

// Above t = 1 - kSeriesCutoff the raw quotient in eval_h is pure
// cancellation noise (numerator ~ eps^2 against terms of size 2^r), so
// evaluation switches to the leading boundary term.
inline constexpr double kSeriesCutoff = 1e-8;

// h(t) = (2^{r - r/p} (1 + t^p)^{r/p} - (1 + t)^r) / (1 - t)^r on [0, 1).
//
// Its infimum over [0, 1) is the optimal lower weak parallelogram constant
// of L^p when 1 < p <= 2 <= r <= q. The function is accepted for any
// p, r > 1 (the upper-law analysis evaluates the same expression with
// p > 2, r < 2), but positivity is only guaranteed on that range.
double eval_h(const Params& prm, double t);

// g(t) = 2^{r/q} (1 + t^p)^{r/p - 1} (1 + t^{p-1}) - 2 (1 + t)^{r-1}.
// h'(t) = r (1-t)^{r-1} g(t) / (1-t)^{2r}, and the cofactor is positive on
// [0, 1), so sign(g) = sign(h'). g(0) = 2^{r/q} - 2; t^{p-1} extends
// continuously to 0 at t = 0.
double h_prime_sign_factor(const Params& prm, double t);

// Boundary limit of h as t -> 1-. Defined for r >= 2 only:
// p - 1 at r = 2, +infinity for r > 2.
double limit_h_at_one(const Params& prm);

// k(t) = 2^{r - r/p} (1 + |t|^p)^{r/p} - |1 + t|^r - C |1 - t|^r, t real.
// Satisfies k(t) = |t|^r k(1/t) for t != 0 and k(t) >= k(|t|); with
// C = C_{p,r} and 1 < p <= 2 <= r <= q it is nonnegative everywhere.
double eval_k(const Params& prm, double C, double t);

// 2^{r - r/p} (|u|^p + |v|^p)^{r/p} - |u + v|^r - C |u - v|^r.
// Homogeneous of degree r; equals |u|^r k(v/u) for u != 0.
double two_point_defect(const Params& prm, double C, double u, double v);

namespace detail {

// Power in extended intermediate precision. t^p for tiny t and fractional p
// is the dominant rounding source of the whole kernel.
long double xpow(long double base, long double exponent);

// Leading boundary behaviour 2^r (r (p-1) / 8) eps^{2-r}; at r = 2 this is
// the constant p - 1.
long double h_series_near_one(long double p, long double r, long double eps);

}  // namespace detail

}  // namespace wpl
