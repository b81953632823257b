#pragma once

#include <vector>

namespace qpf {

// Gauss-Hermite rule for the standard Gaussian weight:
//   integral f(t) e^{-t^2/2} / sqrt(2*pi) dt  ~=~  sum w_i f(t_i),
// exact for polynomials of degree <= 2*nodes - 1. Golub-Welsch on the Jacobi
// matrix of the physicists' weight, then rescaled by t = sqrt(2) x.
struct GaussHermite {
  std::vector<double> t, w;
};

GaussHermite gauss_hermite(int nodes);

}  // namespace qpf
