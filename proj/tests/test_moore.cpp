#include <cmath>
#include <random>

#include "doctest.h"
#include "qpf/kernel.hpp"
#include "qpf/moore.hpp"

using namespace qpf;

namespace {

std::mt19937_64 rng(2026);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Quat random_quat() {
  return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
}

SelfDualMatrix random_self_dual(int k) {
  SelfDualMatrix m(k);
  for (int i = 0; i < k; ++i) {
    m.at(i, i) = Quat::real(uniform(-2, 2));
    for (int j = i + 1; j < k; ++j) {
      m.at(i, j) = random_quat();
      m.at(j, i) = conj(m.at(i, j));
    }
  }
  return m;
}

Quat random_pure_direction() {
  while (true) {
    const Quat v = Quat::pure(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    const double r = norm(v);
    if (r > 0.1) return v * (1.0 / r);
  }
}

}  // namespace

TEST_SUITE("moore") {
  TEST_CASE("diagonal matrices multiply their entries") {
    SelfDualMatrix m(3);
    m.at(0, 0) = Quat::real(2.0);
    m.at(1, 1) = Quat::real(-3.0);
    m.at(2, 2) = Quat::real(5.0);
    CHECK(moore_det(m) == doctest::Approx(-30.0));
  }

  TEST_CASE("2x2 closed form a d - |q|^2") {
    SelfDualMatrix m(2);
    const Quat q = random_quat();
    m.at(0, 0) = Quat::real(1.5);
    m.at(1, 1) = Quat::real(0.7);
    m.at(0, 1) = q;
    m.at(1, 0) = conj(q);
    CHECK(moore_det(m) == doctest::Approx(1.5 * 0.7 - norm_sq(q)).epsilon(1e-12));
  }

  TEST_CASE("squared moore determinant equals the complex embedding determinant") {
    for (int k = 1; k <= 5; ++k) {
      for (int rep = 0; rep < 20; ++rep) {
        const SelfDualMatrix m = random_self_dual(k);
        const double md = moore_det(m);
        const double ed = embedding_det(m);
        const double scale = std::max(1.0, std::abs(ed));
        CHECK(std::abs(md * md - ed) <= 1e-9 * scale);
      }
    }
  }

  TEST_CASE("self-duality validation") {
    SelfDualMatrix m = random_self_dual(3);
    CHECK(validate_self_dual(m).ok);
    m.at(2, 0) = m.at(2, 0) + Quat::real(1e-3);
    const SelfDualCheck bad = validate_self_dual(m);
    CHECK_FALSE(bad.ok);
    CHECK(bad.max_deviation == doctest::Approx(1e-3).epsilon(1e-6));
    CHECK_THROWS_AS((void)moore_det(m), std::invalid_argument);
    m.at(1, 1) = Quat::pure(0.2, 0, 0);  // non-real diagonal also breaks self-duality
    CHECK_FALSE(validate_self_dual(m).ok);
  }

  TEST_CASE("size cap") {
    SelfDualMatrix m(7);
    for (int i = 0; i < 7; ++i) m.at(i, i) = Quat::real(1.0);
    CHECK_THROWS_AS((void)moore_det(m), std::domain_error);
    CHECK(moore_det(m, 7) == doctest::Approx(1.0));
  }

  TEST_CASE("kernel gram matrices are positive semidefinite") {
    // Random configurations against the degree-n reproducing kernel: the Moore
    // determinant of [K(x_i, x_j)] must lie in [0, prod of diagonal].
    for (int rep = 0; rep < 400; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const int k = 2 + static_cast<int>(rng() % 3);
      SelfDualMatrix g(k);
      std::vector<Quat> dir(k);
      std::vector<double> rad(k);
      for (int i = 0; i < k; ++i) {
        dir[i] = random_pure_direction();
        rad[i] = uniform(0.05, 2.5);
      }
      double diag_prod = 1.0;
      for (int i = 0; i < k; ++i) {
        g.at(i, i) = Quat::real(intensity_background(n, rad[i]));
        diag_prod *= g.at(i, i).w;
        for (int j = i + 1; j < k; ++j) {
          g.at(i, j) = kernel_closed(n, dir[i], rad[i], dir[j], rad[j]).value;
          g.at(j, i) = conj(g.at(i, j));
        }
      }
      const double det = moore_det(g);
      CHECK(det >= -1e-9 * diag_prod);
      CHECK(det <= diag_prod * (1.0 + 1e-9));
    }
  }

  TEST_CASE("rank-two matrices have vanishing 3x3 moore determinant") {
    // Build G_ij = <a_i, a_j> + <b_i, b_j> from two quaternion vectors; any
    // 3x3 Gram of rank <= 2 has zero determinant.
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Quat> a(3), b(3);
      for (int i = 0; i < 3; ++i) {
        a[i] = random_quat();
        b[i] = random_quat();
      }
      SelfDualMatrix g(3);
      double scale = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          g.at(i, j) = a[i] * conj(a[j]) + b[i] * conj(b[j]);
          scale = std::max(scale, norm(g.at(i, j)));
        }
      }
      CHECK(std::abs(moore_det(g)) <= 1e-10 * scale * scale * scale);
    }
  }
}
