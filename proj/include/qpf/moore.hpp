#pragma once

#include <vector>

#include "qpf/quaternion.hpp"

namespace qpf {

// k x k quaternion matrix with A[j][i] = conj(A[i][j]); the quaternionic
// analogue of Hermitian. Row-major storage.
struct SelfDualMatrix {
  int k = 0;
  std::vector<Quat> a;

  explicit SelfDualMatrix(int size) : k(size), a(size * size) {}
  Quat& at(int i, int j) { return a[i * k + j]; }
  const Quat& at(int i, int j) const { return a[i * k + j]; }
};

struct SelfDualCheck {
  bool ok;
  double max_deviation;  // largest |A[j][i] - conj(A[i][j])|
};

SelfDualCheck validate_self_dual(const SelfDualMatrix& m, double tol_scale = 1e-9);

// Moore determinant: sum over permutations, each written as disjoint cycles
// with smallest element first; the contribution is (-1)^{k - #cycles} times
// the product over cycles of the scalar part of the ordered entry product.
// Real for self-dual input. Validates self-duality; supports k <= max_size.
double moore_det(const SelfDualMatrix& m, int max_size = 6);

// Determinant of the 2k x 2k complex embedding (entrywise phi). For self-dual
// input this is real and equals moore_det^2; independent cross-check.
double embedding_det(const SelfDualMatrix& m);

}  // namespace qpf
