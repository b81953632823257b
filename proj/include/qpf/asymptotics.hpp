#pragma once

#include "qpf/quaternion.hpp"

namespace qpf {

// Large-n approximations and limit shapes. Quantities whose natural prefactor
// overflows double (Hermite scales near n ~ 1000) are carried as
// mantissa * e^{log_scale}.
struct ScaledReal {
  double mantissa = 0.0;
  double log_scale = 0.0;
  double value() const;
  double log_abs() const;  // -inf at 0
  int sign() const;
};

// ac(x) = sin 2x - 2x and the bulk phase sums
//   daleth = ((n + 3/2)/2)(ac(phi) - ac(psi)),
//   shin   = ((n + 3/2)/2)(ac(phi) + ac(psi)).
double ac(double x);
double daleth(int n, double phi, double psi);
double shin(int n, double phi, double psi);

double sinc(double x);  // sin(x)/x, 1 at 0

// Limiting density of the field rescaled by 2 sqrt(n):
//   rho(s) = (1/(2 pi)^2) sqrt(1-s^2)/s^2 on (0,1), 0 beyond the unit ball.
// radial_limit is 4 pi s^2 rho(s) = (1/pi) sqrt(1-s^2). Requires s > 0.
struct LimitValue {
  double value;
  bool in_support;
};
LimitValue rho_limit(double s);
LimitValue radial_limit(double s);

// 2 sqrt(n) * (Lebesgue intensity at radius 2 sqrt(n) s) against rho_limit.
struct DensityCheck {
  double scaled, limit, abs_err;
};
DensityCheck density_limit_check(int n, double s);

// Oscillatory approximation of psi_n(x) = e^{-x^2/4} H_n(x) / sqrt(n!) at
// x = 2 sqrt(n + 1/2) cos phi:
//   (2/(pi n))^{1/4} (sin phi)^{-1/2} sin[((2n+1)/4)(sin 2phi - 2phi) + 3pi/4].
// Requires n >= 1 and phi in (0.01, pi - 0.01).
double pr_weighted_hermite(int n, double phi);
double pr_amplitude(int n, double phi);  // the (2/(pi n))^{1/4} (sin phi)^{-1/2} envelope

// Fixed-s approximation of the weighted monic Hermite function
// e^{-s^2/4} H_n(s), split into an oscillating factor (mantissa, carrying the
// prefactor's sign) and the log of the prefactor magnitude. (The prefactor
// coincides with the oscillatory amplitude (2/(pi n))^{1/4} sqrt(n!) up to
// O(1/n), so this is the fixed-argument limit of the bulk approximation; the
// unweighted polynomial would differ by e^{s^2/4}, which does not vanish in
// the error term.)
//   odd n:  [Gamma(n/2+1)/sqrt(pi(n+1/2))] 2^{(n+1)/2} (-1)^{(n-1)/2}
//             (sin(s w) + s^3/(24 w) cos(s w)),  w = sqrt(n + 1/2)
//   even n: [Gamma((n+1)/2)/sqrt(pi)] 2^{n/2} (-1)^{n/2}
//             (cos(s w) + s^3/(24 w) sin(s w)).
ScaledReal center_hermite_approx(int n, double s);
// Exact e^{-s^2/4} H_n(s) divided by the same prefactor magnitude (signed),
// and the approximation in that normalization (signed oscillating factor).
double center_hermite_exact_normalized(int n, double s);
double center_hermite_approx_normalized(int n, double s);

// Main term of rho_n(s,t) e^{-(s^2+t^2)/4} deep in the bulk, for
// s = 2 sqrt(n+3/2) cos phi, t = 2 sqrt(n+3/2) cos psi with
// phi, psi in [0.15, pi/2 - 0.05] and s != t:
//   value = prefactor * brace,
//   prefactor = sqrt(2/pi)/8 (n+3/2)^{-3/2} /
//               [(cos phi - cos psi) cos phi cos psi sqrt(sin phi sin psi)],
//   brace = (1/2)[cos(daleth - phi) - cos(daleth + psi)
//                 + sin(shin - psi) - sin(shin - phi)].
struct BulkRho {
  double value, prefactor, brace;
};
BulkRho bulk_rho_mainterm(int n, double s, double t);

// Radius 2 sqrt(n+3/2) cos(phi0 + offset/(2 n sin^2 phi0)), phi0 = arccos(x0).
double bulk_radius(int n, double x0, double offset);

// Rescaled kernel around bulk location x0 in (0.05, 0.95):
//   2 sqrt(n+3/2)/rho_limit(x0) * K_n(u s_n, v t_n) sqrt(f(s_n) f(t_n))
// with s_n = bulk_radius(n, x0, sigma), t_n likewise for tau. Converges to
// sinc(tau - sigma) (1 - uv)/2 as n grows.
Quat bulk_kernel_scaled(int n, const Quat& u, double sigma, const Quat& v, double tau, double x0);

// Center approximation of the weighted kernel K_n(us, vt) e^{-(s^2+t^2)/4}
// at fixed radii s, t > 0:
//   sqrt(2/pi) (1/(st)) [ sin(sqrt(n)(t-s))/(t-s) (1-uv)/2
//                       - sin(sqrt(n)(t+s))/(t+s) (1+uv)/2 ].
// The minus sign on the (1+uv) term is parity-uniform: the delta part's own
// center asymptotic alternates as (-1)^(n+1) and cancels against the (-1)^n
// the kernel puts in front of it.
Quat center_kernel_approx(int n, const Quat& u, double s, const Quat& v, double t);

}  // namespace qpf
