#include "wpl/scalar_kernel.hpp"

#include <cmath>
#include <limits>

namespace wpl {
namespace detail {

long double xpow(long double base, long double exponent) {
  return std::pow(base, exponent);
}

long double h_series_near_one(long double p, long double r, long double eps) {
  const long double coef = xpow(2.0L, r) * r * (p - 1.0L) / 8.0L;
  return coef * xpow(eps, 2.0L - r);
}

}  // namespace detail

using detail::xpow;

double eval_h(const Params& prm, double t) {
  if (!(t >= 0.0 && t < 1.0))
    throw std::domain_error("eval_h: t must lie in [0, 1)");
  const long double p = prm.p();
  const long double r = prm.r();
  const long double tl = t;
  const long double eps = 1.0L - tl;
  if (eps < static_cast<long double>(kSeriesCutoff))
    return static_cast<double>(detail::h_series_near_one(p, r, eps));
  const long double num = xpow(2.0L, r - r / p) * xpow(1.0L + xpow(tl, p), r / p)
                          - xpow(1.0L + tl, r);
  return static_cast<double>(num / xpow(eps, r));
}

double h_prime_sign_factor(const Params& prm, double t) {
  if (!(t >= 0.0 && t < 1.0))
    throw std::domain_error("h_prime_sign_factor: t must lie in [0, 1)");
  const long double p = prm.p();
  const long double r = prm.r();
  const long double tl = t;
  // powl(0, p-1) = 0 for p > 1: the continuous extension of t^{p-1}.
  return static_cast<double>(
      xpow(2.0L, r - r / p) * xpow(1.0L + xpow(tl, p), r / p - 1.0L)
          * (1.0L + xpow(tl, p - 1.0L))
      - 2.0L * xpow(1.0L + tl, r - 1.0L));
}

double limit_h_at_one(const Params& prm) {
  if (prm.r() < 2.0)
    throw std::domain_error("limit_h_at_one: defined for r >= 2 only");
  if (prm.r() == 2.0) return prm.p() - 1.0;
  return std::numeric_limits<double>::infinity();
}

double eval_k(const Params& prm, double C, double t) {
  const long double p = prm.p();
  const long double r = prm.r();
  const long double tl = t;
  return static_cast<double>(
      xpow(2.0L, r - r / p) * xpow(1.0L + xpow(fabsl(tl), p), r / p)
      - xpow(fabsl(1.0L + tl), r)
      - static_cast<long double>(C) * xpow(fabsl(1.0L - tl), r));
}

double two_point_defect(const Params& prm, double C, double u, double v) {
  const long double p = prm.p();
  const long double r = prm.r();
  const long double ul = u;
  const long double vl = v;
  return static_cast<double>(
      xpow(2.0L, r - r / p) * xpow(xpow(fabsl(ul), p) + xpow(fabsl(vl), p), r / p)
      - xpow(fabsl(ul + vl), r)
      - static_cast<long double>(C) * xpow(fabsl(ul - vl), r));
}

}  // namespace wpl
