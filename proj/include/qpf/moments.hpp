#pragma once

#include <vector>

#include "qpf/exact.hpp"

namespace qpf {

// <z^m, z^n> = (-1)^{(n-m)/2} (m+n+1)!! when n-m is even, else 0.
BigInt monomial_inner(int m, int n);

// (n+1) x (n+1) matrix of monomial inner products, s_ij = <z^i, z^j>.
struct MomentMatrix {
  int n;
  std::vector<BigInt> s;  // row-major, (n+1)^2 entries

  const BigInt& operator()(int i, int j) const { return s[i * (n + 1) + j]; }
};

MomentMatrix moment_matrix(int n);

// Exact determinant by fraction-free (Bareiss) elimination; consumes its input.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a);

// det of the moment matrix of order n.
BigInt det_D(int n);

// Monic polynomials of degree 0..n orthogonal under monomial_inner, computed
// by Gram-Schmidt in exact rational arithmetic. Coefficients ascending.
// Independent oracle for the recurrence-built polynomial family.
std::vector<std::vector<BigRat>> gram_schmidt_monic(int n);

}  // namespace qpf
