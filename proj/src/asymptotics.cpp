#include "qpf/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "qpf/kernel.hpp"
#include "qpf/polynomials.hpp"

namespace qpf {

namespace {

constexpr double kBulkAngleMin = 0.15;
constexpr double kBulkAngleMax = M_PI / 2 - 0.05;
constexpr double kSqrt2OverPi = 0.7978845608028654;  // sqrt(2/pi)

double bulk_angle(int n, double radius) {
  const double edge = 2.0 * std::sqrt(n + 1.5);
  if (!(radius > 0.0) || !(radius < edge))
    throw std::domain_error("bulk: radius outside (0, 2 sqrt(n+3/2))");
  return std::acos(radius / edge);
}

}  // namespace

double ScaledReal::value() const { return mantissa * std::exp(log_scale); }
double ScaledReal::log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
int ScaledReal::sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }

double ac(double x) { return std::sin(2.0 * x) - 2.0 * x; }

double daleth(int n, double phi, double psi) { return 0.5 * (n + 1.5) * (ac(phi) - ac(psi)); }

double shin(int n, double phi, double psi) { return 0.5 * (n + 1.5) * (ac(phi) + ac(psi)); }

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

LimitValue rho_limit(double s) {
  if (!(s > 0.0)) throw std::domain_error("rho_limit: requires s > 0");
  if (s >= 1.0) return {0.0, false};
  constexpr double four_pi_sq = 4.0 * M_PI * M_PI;
  return {std::sqrt(1.0 - s * s) / (s * s) / four_pi_sq, true};
}

LimitValue radial_limit(double s) {
  if (!(s > 0.0)) throw std::domain_error("radial_limit: requires s > 0");
  if (s >= 1.0) return {0.0, false};
  return {std::sqrt(1.0 - s * s) / M_PI, true};
}

DensityCheck density_limit_check(int n, double s) {
  const double scale = 2.0 * std::sqrt(static_cast<double>(n));
  const double scaled = scale * intensity_lebesgue_radial(n, scale * s);
  const double limit = rho_limit(s).value;
  return {scaled, limit, std::abs(scaled - limit)};
}

double pr_amplitude(int n, double phi) {
  if (n < 1) throw std::domain_error("pr_amplitude: requires n >= 1");
  if (!(phi > 0.01) || !(phi < M_PI - 0.01))
    throw std::domain_error("pr_amplitude: phi outside (0.01, pi - 0.01)");
  return std::pow(2.0 / (M_PI * n), 0.25) / std::sqrt(std::sin(phi));
}

double pr_weighted_hermite(int n, double phi) {
  const double amp = pr_amplitude(n, phi);
  const double phase = 0.25 * (2.0 * n + 1.0) * (std::sin(2.0 * phi) - 2.0 * phi) + 0.75 * M_PI;
  return amp * std::sin(phase);
}

ScaledReal center_hermite_approx(int n, double s) {
  if (n < 1) throw std::domain_error("center_hermite_approx: requires n >= 1");
  const double w = std::sqrt(n + 0.5);
  const double bend = s * s * s / (24.0 * w);
  if (n % 2 == 1) {
    const double log_pref =
        std::lgamma(0.5 * n + 1.0) - 0.5 * std::log(M_PI * (n + 0.5)) + 0.5 * (n + 1) * M_LN2;
    const double sgn = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return {sgn * (std::sin(s * w) + bend * std::cos(s * w)), log_pref};
  }
  const double log_pref = std::lgamma(0.5 * (n + 1.0)) - 0.5 * std::log(M_PI) + 0.5 * n * M_LN2;
  const double sgn = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  return {sgn * (std::cos(s * w) + bend * std::sin(s * w)), log_pref};
}

double center_hermite_approx_normalized(int n, double s) {
  return center_hermite_approx(n, s).mantissa;
}

double center_hermite_exact_normalized(int n, double s) {
  // e^{-s^2/4} H_n(s) = psi_n(s) sqrt(n!); divide by the approximation's
  // prefactor magnitude. The exponent difference stays O(log n).
  const double log_pref = center_hermite_approx(n, s).log_scale;
  const double psi = weighted_hermite(n, s);
  return psi * std::exp(0.5 * std::lgamma(n + 1.0) - log_pref);
}

BulkRho bulk_rho_mainterm(int n, double s, double t) {
  const double phi = bulk_angle(n, s), psi = bulk_angle(n, t);
  if (phi < kBulkAngleMin || phi > kBulkAngleMax || psi < kBulkAngleMin || psi > kBulkAngleMax)
    throw std::domain_error("bulk_rho_mainterm: angle outside [0.15, pi/2 - 0.05]");
  const double cp = std::cos(phi), cq = std::cos(psi);
  if (std::abs(cp - cq) < 1e-12) throw std::domain_error("bulk_rho_mainterm: requires s != t");
  const double pref = kSqrt2OverPi / 8.0 * std::pow(n + 1.5, -1.5) /
                      ((cp - cq) * cp * cq * std::sqrt(std::sin(phi) * std::sin(psi)));
  const double d = daleth(n, phi, psi), sh = shin(n, phi, psi);
  // Sign of the sin pair: combining the two Plancherel-Rotach products
  //   (2/pi)^{1/2} [psi_{n+2}(s) psi_{n+1}(t) - psi_{n+1}(s) psi_{n+2}(t)] / ((s-t) s t)
  // by product-to-sum yields +sin(shin - psi) - sin(shin - phi) alongside
  // cos(daleth - phi) - cos(daleth + psi); only with this orientation does the
  // residual against the exact weighted rho decay (empirically ~1/n; the
  // opposite orientation leaves an O(1) discrepancy).
  const double brace =
      0.5 * (std::cos(d - phi) - std::cos(d + psi) + std::sin(sh - psi) - std::sin(sh - phi));
  return {pref * brace, pref, brace};
}

double bulk_radius(int n, double x0, double offset) {
  const double phi0 = std::acos(x0);
  const double angle = phi0 + offset / (2.0 * n * std::sin(phi0) * std::sin(phi0));
  return 2.0 * std::sqrt(n + 1.5) * std::cos(angle);
}

Quat bulk_kernel_scaled(int n, const Quat& u, double sigma, const Quat& v, double tau, double x0) {
  if (!(x0 > 0.05) || !(x0 < 0.95))
    throw std::domain_error("bulk_kernel_scaled: x0 outside (0.05, 0.95)");
  const double sn = bulk_radius(n, x0, sigma), tn = bulk_radius(n, x0, tau);
  const Quat weighted = kernel_closed_weighted(n, u, sn, v, tn);
  constexpr double kTwoPiPow = 15.749609945722419;  // (2 pi)^{3/2}
  const double scale = 2.0 * std::sqrt(n + 1.5) / (kTwoPiPow * rho_limit(x0).value);
  return weighted * scale;
}

Quat center_kernel_approx(int n, const Quat& u, double s, const Quat& v, double t) {
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("center_kernel_approx: radii must be positive");
  const double rn = std::sqrt(static_cast<double>(n));
  const Quat uv = u * v;
  const Quat one = Quat::real(1.0);
  const double diff_part = rn * sinc(rn * (t - s));
  const double sum_part = rn * sinc(rn * (t + s));
  // The (1 + uv) term enters with a minus sign for both parities: the center
  // asymptotic of the weighted delta part is (-1)^(n+1) sin(sqrt(n)(t+s))/(t+s)
  // (sign verified numerically at n = 250..4001), and the kernel combines it
  // with a (-1)^n prefactor, so the parity signs cancel to -1.
  return ((one - uv) * (0.5 * diff_part) - (one + uv) * (0.5 * sum_part)) *
         (kSqrt2OverPi / (s * t));
}

}  // namespace qpf
