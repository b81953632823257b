#pragma once

#include <utility>
#include <vector>

#include "qpf/exact.hpp"
#include "qpf/polynomials.hpp"
#include "qpf/quaternion.hpp"

namespace qpf {

// Reproducing kernel of the point field. The field defined by index n has
// N = n + 1 points (the sum below runs k = 0..n).
//
//   K_n(x, y) = sum_{k=0}^{n} P_k(x) conj(P_k(y)) / h_k
//             = rho_n(s,t) (1 - uv)/2 + (-1)^n delta_n(s,t) (1 + uv)/2
//
// for x = u s, y = v t. rho/delta are stored per the closed form; the (-1)^n
// lives in the assembly only.

// Direct sum over exact coefficients; n <= 60 (raw-coefficient range).
Quat kernel_sum(int n, const Quat& x, const Quat& y);

// rho_n(s,t) = [Q_n(s)Q_{n+1}(t) - Q_{n+1}(s)Q_n(t)] / (h_n (t-s)), and the
// same with + and (t+s) for delta. Near the diagonal (|t-s| <= 1e-6 max(1,s))
// both switch to the confluent forms at the midpoint:
//   rho_n(s) = [Q_n Q'_{n+1} - Q_{n+1} Q'_n] / h_n,
//   delta_n(s) = Q_n(s) Q_{n+1}(s) / (s h_n).
// Requires s, t > 0.
std::pair<double, double> rho_delta(int n, double s, double t);

// Same pair times e^{-(s^2+t^2)/4}; stays finite at bulk radii where the bare
// values overflow. Valid for s, t >= 0.
struct WeightedRhoDelta {
  double wrho, wdelta;
};
WeightedRhoDelta weighted_rho_delta(int n, double s, double t);

// Confluent diagonal, weighted: rho_n(s) e^{-s^2/2} and delta_n(s) e^{-s^2/2}.
// Regular at s = 0 (no 1/s^2 form is evaluated; the direct Q recurrence is
// used instead of the Hermite assembly).
double weighted_rho_diag(int n, double s);
double weighted_delta_diag(int n, double s);

struct KernelValue {
  Quat value;
  double rho, delta;
  int parity_sign;  // (-1)^n
  double u_dot_v;
};

// Closed-form kernel at x = u s, y = v t; |u| = |v| = 1, s, t > 0.
KernelValue kernel_closed(int n, const Quat& u, double s, const Quat& v, double t);

// Weighted closed form: K_n(us, vt) e^{-(s^2+t^2)/4}, finite for any radii.
Quat kernel_closed_weighted(int n, const Quat& u, double s, const Quat& v, double t);

// | x K + K conj(y) - [P_{n+1}(x)conj(P_n(y)) + P_n(x)conj(P_{n+1}(y))]/h_n |
// together with the magnitude of the right-hand side (the natural scale).
struct CdResidual {
  double residual, scale;
};
CdResidual cd_residual(int n, const Quat& x, const Quat& y);

// One-point correlation against the background measure: rho_n(s), s > 0.
double intensity_background(int n, double s);

// Lebesgue intensity rho_n(|x|) f(|x|), f(z) = (2pi)^{-3/2} e^{-|z|^2/2}.
// Finite and positive at x = 0 as well.
double intensity_lebesgue(int n, const Quat& x);
double intensity_lebesgue_radial(int n, double r);

// Expected points per unit radius: 4 pi r^2 * Lebesgue intensity.
double radial_density(int n, double r);

// Two-point correlation against the background measure:
//   rho_n(s) rho_n(t) - [rho_n(s,t)^2 (1+cos a)/2 + delta_n(s,t)^2 (1-cos a)/2].
// Agrees with the 2x2 Moore determinant of the kernel Gram matrix.
double pair_correlation(int n, const Quat& x, const Quat& y);

// The same quantity through the Moore determinant (cross-check oracle).
double pair_correlation_moore(int n, const Quat& x, const Quat& y);

// Moore determinant of the 3x3 kernel Gram matrix at three points of equal
// radius; vanishes because the restriction of K_n to a sphere has rank 2.
double triple_gram_det(int n, const Quat& x1, const Quat& x2, const Quat& x3);

// Exact coefficients of rho_n(s) = [Q_n Q'_{n+1} - Q_{n+1} Q'_n] / h_n
// (even polynomial, ascending, degree 2n).
std::vector<BigRat> rho_poly_coeffs(int n);

}  // namespace qpf
