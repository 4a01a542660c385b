#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpl/lp_vector.hpp"

namespace wpl {

struct JamesBound {
  std::string source;  // law and inequality part the bound came from
  double r = 0.0;
  double bound = 0.0;
  // Parts (i)-(iii) are asserted against the estimates; the part-(iv)
  // variants are reported but not asserted (the printed form is stronger
  // than its own substitution argument for r < 2, so both it and the
  // factor-2 variant are carried informationally).
  bool assertable = false;
};

struct DerivedConstantsReport {
  double p = 0.0;
  // Upper bound on the von Neumann-Jordan constant: 1/C_{p,2} for p <= 2,
  // and for p >= 2 the 2-UWP constant obtained through the duality-
  // convention power.
  double nj_upper_bound = 0.0;
  // p >= 2 only: the same bound computed with the theorem-convention
  // power (valid, larger). Equals nj_upper_bound for p <= 2.
  double nj_upper_bound_paper = 0.0;
  std::vector<JamesBound> james_upper_bounds;
  double nj_estimate = 0.0;
  double james_estimate = 0.0;
  long samples = 0;
  int dim = 0;
  std::uint64_t seed = 0;
};

// Bounds part only (estimates left at zero).
DerivedConstantsReport nj_james_bounds(double p);

// Bounds plus certified-lower-bound estimates from seeded sampling.
// Canonical basis pairs are evaluated first, then `samples` random pairs
// per estimate; every record-breaking sample is polished by
// coordinate-wise golden-section ascent. Sample i draws from a stream
// keyed by (seed, i), so the result depends only on (p, dim, samples,
// seed) and is nondecreasing in the sample count.
DerivedConstantsReport empirical_constants(double p, int dim, long samples,
                                           std::uint64_t seed);

// max(rho, 1/rho) with rho = (|x+y|^2 + |x-y|^2) / (2(|x|^2 + |y|^2));
// requires x, y not both zero. Invariant under joint rescaling.
double nj_ratio(const LpVector& x, const LpVector& y);

// min(|x^ + y^|, |x^ - y^|) over the normalized pair; requires both
// vectors nonzero. Invariant under separate rescaling of x and y.
double james_objective(const LpVector& x, const LpVector& y);

}  // namespace wpl
