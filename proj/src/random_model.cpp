#include "wpl/random_model.hpp"

#include <cmath>

namespace wpl {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : state_(mix64(seed + kGamma * (index + 1))) {}

std::uint64_t SampleRng::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double SampleRng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SampleRng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double SampleRng::pareto_two_sided() {
  const double u = uniform01();
  const double mag = std::min(1e6, std::pow(1.0 - u, -1.0 / 2.5));
  return (next_u64() & 1u) ? mag : -mag;
}

double SampleRng::mixture_coordinate() {
  const double u = uniform01();
  if (u < 0.2) return 0.0;
  const double w = (u - 0.2) / 0.8;
  if (w < 1.0 / 3.0) return normal();
  if (w < 2.0 / 3.0) return pareto_two_sided();
  return (next_u64() & 1u) ? 1.0 : -1.0;
}

Eigen::ArrayXd random_coords(SampleRng& rng, Eigen::Index dim) {
  Eigen::ArrayXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.mixture_coordinate();
  return v;
}

LpVector random_lp_vector(double p, Eigen::Index dim, SampleRng& rng) {
  return LpVector(p, random_coords(rng, dim));
}

std::pair<LpVector, LpVector> random_pair(double p, Eigen::Index dim,
                                          std::uint64_t seed,
                                          std::uint64_t index) {
  SampleRng rng(seed, index);
  LpVector x = random_lp_vector(p, dim, rng);
  LpVector y = random_lp_vector(p, dim, rng);
  return {std::move(x), std::move(y)};
}

std::pair<LpVector, LpVector> random_nonzero_pair(double p, Eigen::Index dim,
                                                  std::uint64_t seed,
                                                  std::uint64_t index) {
  SampleRng rng(seed, index);
  auto draw_nonzero = [&] {
    Eigen::ArrayXd v = random_coords(rng, dim);
    while ((v == 0.0).all()) v = random_coords(rng, dim);
    return LpVector(p, std::move(v));
  };
  LpVector x = draw_nonzero();
  LpVector y = draw_nonzero();
  return {std::move(x), std::move(y)};
}

}  // namespace wpl
