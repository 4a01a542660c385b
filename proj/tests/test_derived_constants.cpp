#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "golden_values.hpp"
#include "wpl/derived_constants.hpp"
#include "wpl/random_model.hpp"

using namespace wpl;

namespace {

double min_assertable_james_bound(const DerivedConstantsReport& rep) {
  double m = std::numeric_limits<double>::infinity();
  for (const JamesBound& b : rep.james_upper_bounds)
    if (b.assertable) m = std::min(m, b.bound);
  return m;
}

}  // namespace

TEST_CASE("bounds: closed-form anchor points") {
  {
    const auto rep = nj_james_bounds(2.0);
    CHECK(rep.nj_upper_bound == doctest::Approx(1.0).epsilon(1e-15));
    // part (iii) at r = 2 with constant 1 gives sqrt(2)
    bool found = false;
    for (const auto& b : rep.james_upper_bounds)
      if (b.assertable && b.r == 2.0) {
        CHECK(b.bound == doctest::Approx(golden::kSqrt2).epsilon(1e-12));
        found = true;
      }
    CHECK(found);
  }
  {
    const auto rep = nj_james_bounds(1.5);
    CHECK(rep.nj_upper_bound == doctest::Approx(2.0).epsilon(1e-15));
    // part (iii) at r = 2 with constant 1/2
    bool found = false;
    for (const auto& b : rep.james_upper_bounds)
      if (b.assertable && b.r == 2.0) {
        CHECK(b.bound == doctest::Approx(golden::kJamesBound_15_r2).epsilon(1e-12));
        found = true;
      }
    CHECK(found);
    // part-(iv) entries are present but informational only
    bool informational = false;
    for (const auto& b : rep.james_upper_bounds)
      if (!b.assertable) informational = true;
    CHECK(informational);
  }
  {
    const auto rep = nj_james_bounds(4.0);
    CHECK(rep.nj_upper_bound == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(rep.nj_upper_bound_paper == doctest::Approx(27.0).epsilon(1e-12));
    // (iii) with the unit lower law at r = p is the tight James bound
    CHECK(min_assertable_james_bound(rep)
          == doctest::Approx(golden::kTwoPow34).epsilon(1e-12));
  }
  CHECK_THROWS_AS(nj_james_bounds(1.0), std::domain_error);
}

TEST_CASE("empirical constants in the Hilbert case") {
  const auto rep = empirical_constants(2.0, 2, 10000, 17);
  CHECK(std::fabs(rep.nj_estimate - 1.0) <= 1e-9);
  CHECK(std::fabs(rep.james_estimate - golden::kSqrt2) <= 1e-6);
  CHECK(rep.samples == 10000);
  CHECK(rep.dim == 2);
  CHECK(rep.seed == 17);
}

TEST_CASE("empirical constants at p = 3/2 meet the known extremals") {
  const auto rep = empirical_constants(1.5, 2, 20000, 4);
  CHECK(std::fabs(rep.nj_estimate - golden::kCbrt2) <= 1e-6);
  CHECK(std::fabs(rep.james_estimate - golden::kTwoPow23) <= 1e-6);
  // independent oracle: dense angle-parameterized grid over 2-D unit pairs
  double grid_max = 0.0;
  const int m = 90;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double al = 3.14159265358979323846 * i / m;
      const double be = 3.14159265358979323846 * j / m;
      Eigen::ArrayXd xc(2), yc(2);
      xc << std::cos(al), std::sin(al);
      yc << std::cos(be), std::sin(be);
      grid_max = std::max(grid_max, nj_ratio(LpVector(1.5, xc), LpVector(1.5, yc)));
    }
  }
  CHECK(rep.nj_estimate >= grid_max - 1e-3);
}

TEST_CASE("empirical constants at p = 4 meet the known extremals") {
  const auto rep = empirical_constants(4.0, 2, 10000, 12);
  CHECK(std::fabs(rep.james_estimate - golden::kTwoPow34) <= 1e-6);
  CHECK(std::fabs(rep.nj_estimate - golden::kSqrt2) <= 1e-6);
}

TEST_CASE("estimates respect the assertable bounds") {
  for (double p : {1.3, 1.5, 2.0, 2.5, 4.0}) {
    const auto rep = empirical_constants(p, 3, 3000, 9);
    CHECK(rep.nj_estimate <= rep.nj_upper_bound + 1e-6);
    CHECK(rep.james_estimate <= min_assertable_james_bound(rep) + 1e-6);
    // definitional ranges
    CHECK(rep.nj_estimate >= 1.0);
    CHECK(rep.james_estimate >= 1.0);
    CHECK(rep.james_estimate <= 2.0);
  }
}

TEST_CASE("estimates refine monotonically in the sample count") {
  for (double p : {1.5, 2.7}) {
    double prev_nj = 0.0, prev_jm = 0.0;
    for (long n : {100L, 1000L, 5000L}) {
      const auto rep = empirical_constants(p, 3, n, 7);
      CHECK(rep.nj_estimate >= prev_nj);
      CHECK(rep.james_estimate >= prev_jm);
      prev_nj = rep.nj_estimate;
      prev_jm = rep.james_estimate;
    }
  }
}

TEST_CASE("estimates are reproducible for a fixed configuration") {
  const auto a = empirical_constants(1.7, 4, 2000, 99);
  const auto b = empirical_constants(1.7, 4, 2000, 99);
  CHECK(a.nj_estimate == b.nj_estimate);
  CHECK(a.james_estimate == b.james_estimate);
}

TEST_CASE("ratio helpers are scale invariant") {
  SampleRng rng(31, 0);
  for (int i = 0; i < 300; ++i) {
    const auto [x, y] = random_nonzero_pair(1.6, 3, 31, i);
    const double s = std::exp(4.0 * (rng.uniform01() - 0.5));
    const LpVector sx(1.6, s * x.coords());
    const LpVector sy(1.6, s * y.coords());
    CHECK(nj_ratio(sx, sy) == doctest::Approx(nj_ratio(x, y)).epsilon(1e-12));
    const double t = std::exp(4.0 * (rng.uniform01() - 0.5));
    const LpVector ty(1.6, t * y.coords());
    CHECK(james_objective(sx, ty)
          == doctest::Approx(james_objective(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("validation of estimator inputs and ratio preconditions") {
  CHECK_THROWS_AS(empirical_constants(1.5, 1, 100, 0), std::domain_error);
  CHECK_THROWS_AS(empirical_constants(1.5, 2, 0, 0), std::domain_error);
  Eigen::ArrayXd z = Eigen::ArrayXd::Zero(2);
  CHECK_THROWS_AS(nj_ratio(LpVector(2.0, z), LpVector(2.0, z)),
                  std::invalid_argument);
  Eigen::ArrayXd e(2);
  e << 1.0, 0.0;
  CHECK_THROWS_AS(james_objective(LpVector(2.0, e), LpVector(2.0, z)),
                  std::invalid_argument);
}
