#pragma once

#include <string>
#include <vector>

#include "qpf/exact.hpp"
#include "qpf/quaternion.hpp"

namespace qpf {

// Squared norm h_n and recurrence coefficient beta_n of the monic orthogonal
// family: h_n = n!(n+2) for odd n, (n+1)! for even n; beta_n = n+2 odd, n even.
BigInt h_norm(int n);
BigInt beta_coeff(int n);  // n >= 1

// Monic orthogonal polynomials on pure quaternions, P_{n+1} = z P_n + beta_n P_{n-1}.
// Coefficients ascending by degree; exact integers. Raw-coefficient evaluation
// is meaningful up to n ~ 60; beyond that use the weighted recurrences below.
std::vector<BigInt> p_poly(int n);

// Radial companions defined by P_n(u s) = u^n Q_n(s); Q_{n+1} = x Q_n - beta_n Q_{n-1}.
std::vector<BigInt> q_poly(int n);

// Monic probabilists' Hermite, H_{n+1} = x H_n - n H_{n-1}.
std::vector<BigInt> hermite_monic(int n);

// Horner evaluation of an exact-coefficient polynomial.
double eval_poly(const std::vector<BigInt>& coeff, double x);
double eval_poly(const std::vector<BigRat>& coeff, double x);
Quat eval_poly(const std::vector<BigInt>& coeff, const Quat& z);

// Derivative coefficients.
std::vector<BigInt> derivative(const std::vector<BigInt>& coeff);

// P_n(u s) through the Hermite representation:
//   even n: (u^n / s)   H_{n+1}(s)
//   odd n:  (u^n / s^2) (s H_{n+1}(s) + H_n(s))
// Requires s > 0 (the representation is singular at 0; use eval_poly there).
Quat p_eval_hermite(int n, const Quat& u, double s);

// Normalized weighted Hermite functions psi_k = e^{-x^2/4} H_k(x) / sqrt(k!),
// by the recurrence psi_{k+1} = (x psi_k - sqrt(k) psi_{k-1}) / sqrt(k+1),
// carried in scaled form so intermediates survive e^{-x^2/4} underflow.
// Returns (psi_n, psi_{n+1}).
struct PsiPair {
  double n, n1;
};
PsiPair weighted_hermite_pair(int n, double x);
inline double weighted_hermite(int n, double x) { return weighted_hermite_pair(n, x).n; }

// e^{-s^2/4} Q_n(s) / sqrt(h_n), assembled from the weighted Hermite pair and
// the closed-form h_n. Valid for n up to ~1e5; near s = 0 falls back to the
// direct Q recurrence (the Hermite assembly divides by s).
double weighted_q(int n, double s);

// Same quantity with its sibling and derivatives, from the direct recurrence
//   g_{k+1} = (s g_k - sqrt(beta_k) g_{k-1}) / sqrt(beta_{k+1}),
// which is regular at s = 0. dqn/dqn1 differentiate Q only (the e^{-s^2/4}
// factor is untouched): dqn = e^{-s^2/4} Q_n'(s) / sqrt(h_n).
struct WeightedQState {
  double qn, qn1;    // e^{-s^2/4} Q_n / sqrt(h_n), same for n+1
  double dqn, dqn1;  // e^{-s^2/4} Q_n' / sqrt(h_n), same for n+1
};
WeightedQState weighted_q_state(int n, double s);

// All n real zeros of Q_n, ascending; bracketing on the stable evaluation,
// refined by bisection. 1 <= n <= 40.
std::vector<double> q_zeros(int n);

// "z^6+21z^4+105z^2+105"-style rendering, descending powers.
std::string poly_to_string(const std::vector<BigInt>& coeff, const std::string& var);

}  // namespace qpf
