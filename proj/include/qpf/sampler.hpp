#pragma once

#include <cstdint>
#include <vector>

#include "qpf/quaternion.hpp"

namespace qpf {

// Exact rejection sampler for the point field at small index (n <= 2; the
// configuration size is N = n + 1 and the proposal constant grows like
// (n+1)^N / N!).
struct SamplerConfig {
  int n = 1;
  long long count = 10000;  // accepted configurations to produce
  std::uint64_t seed = 1;
  int workers = 1;
};

struct SampleStats {
  long long proposals = 0;
  long long accepted = 0;
  double max_ratio = 0.0;
};

struct SampleResult {
  std::vector<Quat> points;  // accepted configurations, flattened (n+1 points each)
  SampleStats stats;
};

// Joint density of one configuration against Lebesgue measure on (R^3)^N:
//   MooreDet[K_n(x_i, x_j)]_{i,j} prod_i f(x_i) / N!,   f(x) = (2pi)^{-3/2} e^{-|x|^2/2}.
double joint_density(int n, const std::vector<Quat>& pts);

// Proposals are N i.i.d. draws from the one-point intensity
// rho_n(|x|) f(x) / (n+1); the acceptance ratio
//   MooreDet[K_n(x_i,x_j)] / prod_i K_n(x_i,x_i)
// lies in [0, 1], making the rejection exact with constant M = (n+1)^N / N!.
// Deterministic for fixed (seed, workers): each worker runs an independent
// stream derived from the seed and results are concatenated in worker order.
// Throws (with the configuration serialized in the message) if the ratio ever
// exceeds 1 + 1e-9.
SampleResult rejection_sample(const SamplerConfig& cfg);

// Per-point radial CDF P(|x| <= r) = (n+1)^{-1} int_0^r rho_n(a) a^2 e^{-a^2/2} sqrt(2/pi) da,
// in closed form (error function plus polynomial corrections).
double radial_cdf(int n, double r);

struct Histogram {
  double lo = 0.0, hi = 0.0;
  std::vector<long long> counts;  // uniform bins on [lo, hi]
};

struct RadialCheck {
  Histogram hist;  // 50 bins on [0, 6]
  double ks;       // Kolmogorov-Smirnov distance to the exact radial CDF
};
RadialCheck estimate_radial(int n, const std::vector<Quat>& points);

// Exact density of c = cos(angle between the two points) for the n = 1 field:
//   m(c) = 1/2 - 4 c / (3 pi)  on [-1, 1]
// (linear; the mean is -8/(9 pi), directions repel).
double angular_marginal(double c);

struct AngularCheck {
  Histogram hist;   // 50 bins of cos(angle) on [-1, 1]
  double max_z;     // sup over bins of |count - E| / multinomial sigma
  double mean_cos;  // sample mean, expected -8/(9 pi)
};
// Points are consumed as consecutive two-point configurations (n = 1).
AngularCheck estimate_angular(const std::vector<Quat>& points);

}  // namespace qpf
