#include "qpf/moore.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpf {

SelfDualCheck validate_self_dual(const SelfDualMatrix& m, double tol_scale) {
  double dev = 0, scale = 0;
  for (int i = 0; i < m.k; ++i) {
    for (int j = 0; j < m.k; ++j) {
      dev = std::max(dev, norm(m.at(j, i) - conj(m.at(i, j))));
      scale = std::max(scale, norm(m.at(i, j)));
    }
  }
  return {dev <= tol_scale * std::max(1.0, scale), dev};
}

double moore_det(const SelfDualMatrix& m, int max_size) {
  const int k = m.k;
  if (k > max_size) throw std::domain_error("moore_det: matrix larger than configured max");
  SelfDualCheck chk = validate_self_dual(m);
  if (!chk.ok) throw std::invalid_argument("moore_det: input is not self-dual");
  if (k == 0) return 1.0;

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double det = 0;
  std::vector<bool> seen(k);
  do {
    std::fill(seen.begin(), seen.end(), false);
    double term = 1.0;
    int cycles = 0;
    for (int start = 0; start < k; ++start) {
      if (seen[start]) continue;
      ++cycles;
      // smallest-first cycle product A[start][p(start)] A[p(start)][p^2(start)] ...
      Quat prod = Quat::real(1.0);
      int i = start;
      do {
        prod = prod * m.at(i, perm[i]);
        seen[i] = true;
        i = perm[i];
      } while (i != start);
      term *= prod.w;  // scalar part of the closed cycle
    }
    det += ((k - cycles) % 2 == 0 ? term : -term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

double embedding_det(const SelfDualMatrix& m) {
  const int k = m.k;
  Eigen::MatrixXcd e(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      ComplexEmbedding ph = embed(m.at(i, j));
      e(2 * i, 2 * j) = ph.a;
      e(2 * i, 2 * j + 1) = ph.b;
      e(2 * i + 1, 2 * j) = ph.c;
      e(2 * i + 1, 2 * j + 1) = ph.d;
    }
  }
  return e.determinant().real();
}

}  // namespace qpf
