#include "qpf/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qpf/kernel.hpp"
#include "qpf/moore.hpp"

namespace qpf {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Hand-rolled uniform/normal draws: the standard <random> distributions are
// not pinned across library implementations, and reruns must be bit-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t stream_seed) : eng_(stream_seed) {}

  double uniform() {  // (0, 1]
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double a = 2.0 * M_PI * uniform();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double chi(int dim) {
    double sq = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double z = normal();
      sq += z * z;
    }
    return std::sqrt(sq);
  }

  Quat unit_direction() {
    for (;;) {
      const Quat v = Quat::pure(normal(), normal(), normal());
      const double len = norm(v);
      if (len > 1e-12) return v / len;
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Radius draw from the one-point intensity rho_n(r) r^2 e^{-r^2/2} (normalized):
//   n = 0: rho_0 = 1                -> chi(3)
//   n = 1: rho_1 = (r^2+3)/3        -> equal-mass mixture chi(5)/chi(3)
//   n = 2: rho_2 = (r^4-4r^2+15)/6  -> envelope (r^6+15r^2) e^{-r^2/2}, i.e.
//          equal-mass mixture chi(7)/chi(3), thinned by
//          (r^4-4r^2+15)/(r^4+15)   (the quartic has no real roots).
double propose_radius(int n, Rng& rng) {
  switch (n) {
    case 0:
      return rng.chi(3);
    case 1:
      return rng.uniform() <= 0.5 ? rng.chi(5) : rng.chi(3);
    default:
      for (;;) {
        const double r = rng.uniform() <= 0.5 ? rng.chi(7) : rng.chi(3);
        const double r2 = r * r;
        const double accept = (r2 * r2 - 4.0 * r2 + 15.0) / (r2 * r2 + 15.0);
        if (rng.uniform() <= accept) return r;
      }
  }
}

struct Proposal {
  std::vector<Quat> dirs;
  std::vector<double> radii;
};

double gram_ratio(int n, const Proposal& p) {
  const int size = n + 1;
  SelfDualMatrix gram(size);
  double diag = 1.0;
  for (int i = 0; i < size; ++i) {
    const double rho = intensity_background(n, p.radii[i]);
    gram.at(i, i) = Quat::real(rho);
    diag *= rho;
    for (int j = i + 1; j < size; ++j) {
      gram.at(i, j) = kernel_closed(n, p.dirs[i], p.radii[i], p.dirs[j], p.radii[j]).value;
      gram.at(j, i) = conj(gram.at(i, j));
    }
  }
  return moore_det(gram) / diag;
}

struct WorkerOut {
  std::vector<Quat> points;
  long long proposals = 0;
  double max_ratio = 0.0;
};

WorkerOut run_worker(const SamplerConfig& cfg, int worker, long long quota) {
  Rng rng(splitmix64(cfg.seed + kGolden * static_cast<std::uint64_t>(worker + 1)));
  const int size = cfg.n + 1;
  WorkerOut out;
  out.points.reserve(quota * size);
  Proposal p;
  p.dirs.resize(size);
  p.radii.resize(size);
  long long accepted = 0;
  while (accepted < quota) {
    for (int i = 0; i < size; ++i) {
      p.dirs[i] = rng.unit_direction();
      p.radii[i] = propose_radius(cfg.n, rng);
    }
    ++out.proposals;
    const double ratio = gram_ratio(cfg.n, p);
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (ratio > 1.0 + 1e-9) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "rejection_sample: ratio " << ratio << " exceeds 1 + 1e-9 at configuration";
      for (int i = 0; i < size; ++i) {
        const Quat pt = p.dirs[i] * p.radii[i];
        msg << " (" << pt.x << ", " << pt.y << ", " << pt.z << ")";
      }
      throw std::runtime_error(msg.str());
    }
    if (rng.uniform() <= ratio) {
      ++accepted;
      for (int i = 0; i < size; ++i) out.points.push_back(p.dirs[i] * p.radii[i]);
    }
  }
  return out;
}

std::vector<double> rho_coeffs_double(int n) {
  const std::vector<BigRat> exact = rho_poly_coeffs(n);
  std::vector<double> out(exact.size());
  for (size_t i = 0; i < exact.size(); ++i) out[i] = exact[i].convert_to<double>();
  return out;
}

// J_m(r) = int_0^r a^{2m} e^{-a^2/2} da, by the downward-free recurrence
// J_m = (2m-1) J_{m-1} - r^{2m-1} e^{-r^2/2}.
double radial_cdf_with(const std::vector<double>& coeffs, int n, double r) {
  constexpr double kSqrtHalfPi = 1.2533141373155003;  // sqrt(pi/2)
  const double expf = std::exp(-0.5 * r * r);
  double j = kSqrtHalfPi * std::erf(r / std::sqrt(2.0));  // J_0
  double rpow = r;                                        // r^{2m-1} at m = 1
  double acc = 0.0;
  const int top = static_cast<int>(coeffs.size() / 2);  // degree 2n -> m up to n+1
  for (int m = 1; m <= top + 1; ++m) {
    j = (2.0 * m - 1.0) * j - rpow * expf;
    rpow *= r * r;
    const size_t idx = 2 * (m - 1);
    if (idx < coeffs.size()) acc += coeffs[idx] * j;
  }
  constexpr double kSqrtTwoOverPi = 0.7978845608028654;
  return kSqrtTwoOverPi * acc / (n + 1);
}

}  // namespace

double joint_density(int n, const std::vector<Quat>& pts) {
  if (n < 0 || n > 2) throw std::domain_error("joint_density: requires 0 <= n <= 2");
  const int size = n + 1;
  if (static_cast<int>(pts.size()) != size)
    throw std::invalid_argument("joint_density: configuration must hold n + 1 points");
  SelfDualMatrix gram(size);
  double background = 1.0;
  constexpr double kTwoPiPow = 15.749609945722419;  // (2 pi)^{3/2}
  for (int i = 0; i < size; ++i) {
    const Polar pi_ = polar(pts[i]);
    gram.at(i, i) = Quat::real(intensity_background(n, pi_.s));
    background *= std::exp(-0.5 * pi_.s * pi_.s) / kTwoPiPow;
    for (int j = i + 1; j < size; ++j) {
      const Polar pj = polar(pts[j]);
      gram.at(i, j) = kernel_closed(n, pi_.u, pi_.s, pj.u, pj.s).value;
      gram.at(j, i) = conj(gram.at(i, j));
    }
  }
  double factorial = 1.0;
  for (int i = 2; i <= size; ++i) factorial *= i;
  return moore_det(gram) * background / factorial;
}

SampleResult rejection_sample(const SamplerConfig& cfg) {
  if (cfg.n < 0 || cfg.n > 2) throw std::domain_error("rejection_sample: requires 0 <= n <= 2");
  if (cfg.count < 0) throw std::invalid_argument("rejection_sample: count must be >= 0");
  if (cfg.workers < 1) throw std::invalid_argument("rejection_sample: workers must be >= 1");

  const int workers = cfg.workers;
  std::vector<WorkerOut> outs(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const long long quota = cfg.count / workers + (w < cfg.count % workers ? 1 : 0);
    pool.emplace_back([&, w, quota] {
      try {
        outs[w] = run_worker(cfg, w, quota);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  SampleResult result;
  result.points.reserve(cfg.count * (cfg.n + 1));
  for (const WorkerOut& out : outs) {
    result.points.insert(result.points.end(), out.points.begin(), out.points.end());
    result.stats.proposals += out.proposals;
    result.stats.max_ratio = std::max(result.stats.max_ratio, out.max_ratio);
  }
  result.stats.accepted = cfg.count;
  return result;
}

double radial_cdf(int n, double r) {
  if (n < 0) throw std::domain_error("radial_cdf: requires n >= 0");
  if (r <= 0.0) return 0.0;
  return radial_cdf_with(rho_coeffs_double(n), n, r);
}

RadialCheck estimate_radial(int n, const std::vector<Quat>& points) {
  RadialCheck check;
  check.hist.lo = 0.0;
  check.hist.hi = 6.0;
  check.hist.counts.assign(50, 0);
  std::vector<double> radii;
  radii.reserve(points.size());
  for (const Quat& p : points) {
    const double r = norm(p);
    radii.push_back(r);
    const int bin = static_cast<int>(r / 6.0 * 50.0);
    if (bin >= 0 && bin < 50) ++check.hist.counts[bin];
  }
  std::sort(radii.begin(), radii.end());
  const std::vector<double> coeffs = rho_coeffs_double(n);
  const double total = static_cast<double>(radii.size());
  double ks = 0.0;
  for (size_t i = 0; i < radii.size(); ++i) {
    const double f = radial_cdf_with(coeffs, n, radii[i]);
    ks = std::max(ks, std::max(std::abs(f - i / total), std::abs(f - (i + 1) / total)));
  }
  check.ks = ks;
  return check;
}

double angular_marginal(double c) {
  if (c < -1.0 || c > 1.0) throw std::domain_error("angular_marginal: requires c in [-1, 1]");
  return 0.5 - 4.0 * c / (3.0 * M_PI);
}

AngularCheck estimate_angular(const std::vector<Quat>& points) {
  if (points.size() % 2 != 0)
    throw std::invalid_argument("estimate_angular: expects two-point configurations");
  AngularCheck check;
  check.hist.lo = -1.0;
  check.hist.hi = 1.0;
  check.hist.counts.assign(50, 0);
  const size_t pairs = points.size() / 2;
  double mean = 0.0;
  for (size_t m = 0; m < pairs; ++m) {
    const Quat& a = points[2 * m];
    const Quat& b = points[2 * m + 1];
    double c = dot3(a, b) / (norm(a) * norm(b));
    c = std::clamp(c, -1.0, 1.0);
    mean += c;
    const int bin = std::min(static_cast<int>((c + 1.0) / 2.0 * 50.0), 49);
    ++check.hist.counts[bin];
  }
  check.mean_cos = pairs > 0 ? mean / pairs : 0.0;
  double max_z = 0.0;
  const double total = static_cast<double>(pairs);
  for (int b = 0; b < 50; ++b) {
    const double c1 = -1.0 + b * (2.0 / 50.0), c2 = c1 + 2.0 / 50.0;
    const double p = (c2 - c1) / 2.0 - 2.0 / (3.0 * M_PI) * (c2 * c2 - c1 * c1);
    const double sigma = std::sqrt(total * p * (1.0 - p));
    if (sigma > 0.0)
      max_z = std::max(max_z, std::abs(check.hist.counts[b] - total * p) / sigma);
  }
  check.max_z = max_z;
  return check;
}

}  // namespace qpf
