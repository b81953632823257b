#include "qpf/moments.hpp"

namespace qpf {

BigInt monomial_inner(int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("monomial_inner: negative degree");
  if ((n - m) % 2 != 0) return 0;
  BigInt v = double_factorial(m + n + 1);
  return ((n - m) / 2) % 2 == 0 ? v : -v;
}

MomentMatrix moment_matrix(int n) {
  MomentMatrix d{n, {}};
  d.s.reserve((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) d.s.push_back(monomial_inner(i, j));
  return d;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (a[p][p] == 0) {  // pivot search with row swap
      int r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j) {
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;  // exact division
      }
    prev = a[p][p];
  }
  return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

BigInt det_D(int n) {
  MomentMatrix d = moment_matrix(n);
  std::vector<std::vector<BigInt>> a(n + 1, std::vector<BigInt>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) a[i][j] = d(i, j);
  return bareiss_det(std::move(a));
}

namespace {

// <p, q> extended bilinearly (real coefficients) from monomial_inner.
BigRat poly_inner(const std::vector<BigRat>& p, const std::vector<BigRat>& q) {
  BigRat acc = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (size_t j = 0; j < q.size(); ++j) {
      if (q[j] == 0) continue;
      acc += p[i] * q[j] * BigRat(monomial_inner(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  return acc;
}

}  // namespace

std::vector<std::vector<BigRat>> gram_schmidt_monic(int n) {
  std::vector<std::vector<BigRat>> basis;
  std::vector<BigRat> norms;  // <P_k, P_k>
  for (int d = 0; d <= n; ++d) {
    std::vector<BigRat> p(d + 1, BigRat(0));
    p[d] = 1;  // monomial z^d
    for (int k = 0; k < d; ++k) {
      BigRat c = poly_inner(basis[k], p) / norms[k];
      if (c == 0) continue;
      for (size_t i = 0; i < basis[k].size(); ++i) p[i] -= c * basis[k][i];
    }
    norms.push_back(poly_inner(p, p));
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace qpf
