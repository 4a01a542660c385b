#pragma once

#include <cstdint>
#include <utility>

#include "wpl/lp_vector.hpp"

namespace wpl {

// Counter-based stream: sample i draws from a generator keyed by
// (seed, i), so results are independent of evaluation order and worker
// count. The output function is splitmix64.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform01();  // [0, 1)
  double normal();     // Box-Muller
  // Two-sided Pareto, tail index 2.5, magnitude capped at 1e6.
  double pareto_two_sided();
  // Test-vector coordinate model: exact zero with probability 0.2, the
  // rest split evenly between standard normal, two-sided Pareto, and
  // +-1 atoms. Exercises sparsity, heavy tails, and sign cancellation,
  // where p-norm inequalities are tight.
  double mixture_coordinate();

 private:
  std::uint64_t state_;
};

Eigen::ArrayXd random_coords(SampleRng& rng, Eigen::Index dim);

LpVector random_lp_vector(double p, Eigen::Index dim, SampleRng& rng);

// Both vectors of sample `index` come from the same stream.
std::pair<LpVector, LpVector> random_pair(double p, Eigen::Index dim,
                                          std::uint64_t seed,
                                          std::uint64_t index);

// As random_pair, but re-draws (within the stream) until neither vector is
// identically zero.
std::pair<LpVector, LpVector> random_nonzero_pair(double p, Eigen::Index dim,
                                                  std::uint64_t seed,
                                                  std::uint64_t index);

}  // namespace wpl
