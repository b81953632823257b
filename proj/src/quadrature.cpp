#include "qpf/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace qpf {

namespace {

// Orthonormal weighted Hermite functions psi_k(x) = e^{-x^2/4} H_k(x)/sqrt(k!)
// at one point, carried as mantissas with a shared log offset so the sweep
// survives both the e^{-x^2/4} start and the polynomial growth in the tails.
struct PsiSweep {
  double n = 0.0, n1 = 0.0;  // psi_{N-1}, psi_N (mantissas)
  double log_scale = 0.0;    // actual value = mantissa * e^{log_scale}
  double sum_sq = 0.0;       // sum_{k<N} psi_k^2 (times e^{2 log_scale})
};

PsiSweep psi_sweep(int count, double x) {
  PsiSweep s;
  s.log_scale = -0.25 * x * x;
  double prev = 0.0, cur = 1.0;  // psi_0 mantissa
  s.sum_sq = 1.0;
  for (int k = 1; k <= count; ++k) {
    double next = (x * cur - std::sqrt(k - 1.0) * prev) / std::sqrt(static_cast<double>(k));
    prev = cur;
    cur = next;
    if (k < count) s.sum_sq += cur * cur;
    const double mag = std::abs(cur) + std::abs(prev);
    if (mag > 1e150) {
      prev *= 1e-150;
      cur *= 1e-150;
      s.sum_sq *= 1e-300;
      s.log_scale += 150.0 * std::log(10.0);
    }
  }
  s.n = prev;
  s.n1 = cur;
  return s;
}

}  // namespace

GaussHermite gauss_hermite(int nodes) {
  if (nodes < 1) throw std::domain_error("gauss_hermite: need at least one node");
  // Node seeds: eigenvalues of the Jacobi matrix for the probabilists' weight
  // (off-diagonal sqrt(k)).
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(nodes, nodes);
  for (int k = 1; k < nodes; ++k) {
    const double off = std::sqrt(static_cast<double>(k));
    j(k, k - 1) = off;
    j(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j, Eigen::EigenvaluesOnly);
  GaussHermite gh;
  gh.t.resize(nodes);
  gh.w.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    double x = es.eigenvalues()(i);
    // Newton refinement on psi_N (same zeros as H_N):
    //   psi_N' = -(x/2) psi_N + sqrt(N) psi_{N-1}.
    for (int it = 0; it < 3; ++it) {
      const PsiSweep s = psi_sweep(nodes, x);
      const double deriv = -0.5 * x * s.n1 + std::sqrt(static_cast<double>(nodes)) * s.n;
      if (deriv == 0.0) break;
      const double step = s.n1 / deriv;
      x -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    // Gauss weight = Christoffel number: w = 1 / sum_{k<N} p_k(x)^2 with p_k
    // orthonormal for e^{-t^2/2}/sqrt(2 pi), i.e. w = e^{-x^2/2} / sum psi_k^2.
    // Computed through the shared log offset; exponent equals the rescale
    // total, so it stays moderate, and weights keep full relative accuracy
    // however small they are.
    const PsiSweep s = psi_sweep(nodes, x);
    const double log_w = -0.5 * x * x - 2.0 * s.log_scale - std::log(s.sum_sq);
    gh.t[i] = x;
    gh.w[i] = std::exp(log_w);
  }
  return gh;
}

}  // namespace qpf
