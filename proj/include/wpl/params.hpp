#pragma once

#include <cmath>
#include <stdexcept>

namespace wpl {

// Side of a weak parallelogram inequality:
//   lwp:  |x+y|^r + C|x-y|^r <= 2^{r-1}(|x|^r + |y|^r)
//   uwp:  |x+y|^r + C|x-y|^r >= 2^{r-1}(|x|^r + |y|^r)
enum class LawKind { lwp, uwp };

inline const char* to_string(LawKind k) {
  return k == LawKind::lwp ? "lwp" : "uwp";
}

// Exponent pair (p, r): p is the Lebesgue exponent of the space, r the law
// exponent. q and r' are the Holder conjugates, 1/p + 1/q = 1/r + 1/r' = 1.
class Params {
 public:
  Params(double p, double r) : p_(p), r_(r) {
    if (!(std::isfinite(p) && p > 1.0))
      throw std::domain_error("Params: p must be finite and > 1");
    if (!(std::isfinite(r) && r > 1.0))
      throw std::domain_error("Params: r must be finite and > 1");
  }

  double p() const { return p_; }
  double r() const { return r_; }
  double q() const { return p_ / (p_ - 1.0); }
  double r_prime() const { return r_ / (r_ - 1.0); }

 private:
  double p_;
  double r_;
};

// Thrown when an iterative routine cannot reach its requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wpl
