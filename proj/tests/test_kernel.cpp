#include <cmath>
#include <random>

#include "doctest.h"
#include "qpf/kernel.hpp"

using namespace qpf;

namespace {

std::mt19937_64 rng(4096);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Quat random_direction() {
  while (true) {
    const Quat v = Quat::pure(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    const double r = norm(v);
    if (r > 0.1) return v * (1.0 / r);
  }
}

const Quat qi = Quat::pure(1, 0, 0);
const Quat qj = Quat::pure(0, 1, 0);
const Quat qk = Quat::pure(0, 0, 1);

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("degree one closed form: K_1(us, vt) = 1 - (st/3) uv") {
    for (int rep = 0; rep < 30; ++rep) {
      const Quat u = random_direction(), v = random_direction();
      const double s = uniform(0.1, 3), t = uniform(0.1, 3);
      const Quat expect = Quat::real(1.0) - (u * v) * (s * t / 3.0);
      CHECK(norm(kernel_sum(1, u * s, v * t) - expect) <= 1e-12 * norm(expect));
      CHECK(norm(kernel_closed(1, u, s, v, t).value - expect) <= 1e-12 * norm(expect));
    }
  }

  TEST_CASE("degree one pinned values and conjugation equivariance") {
    const Quat a = kernel_sum(1, qi, qj);  // 1 - k/3
    CHECK(norm(a - (Quat::real(1) - qk * (1.0 / 3))) < 1e-14);
    const Quat b = kernel_sum(1, qi, qk);  // 1 + j/3
    CHECK(norm(b - (Quat::real(1) + qj * (1.0 / 3))) < 1e-14);
    // The rotation Ad_q with q = (1+i)/sqrt(2) maps j -> k, k -> -j, fixes i;
    // it sends the pair (i, j) to (i, k), and indeed q K(i,j) q^{-1} = K(i,k).
    const Quat q{std::sqrt(0.5), std::sqrt(0.5), 0, 0};
    const Quat rotated = q * a * inverse(q);
    CHECK(norm(rotated - b) < 1e-14);
    // So the kernel is equivariant, not invariant: K(i,j) != K(i,k); the two
    // values differ by |j + k|/3 = sqrt(2)/3.
    CHECK(norm(a - b) == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
  }

  TEST_CASE("hermitian symmetry and real diagonal") {
    for (int rep = 0; rep < 40; ++rep) {
      const int n = static_cast<int>(rng() % 12);
      const Quat u = random_direction(), v = random_direction();
      const double s = uniform(0.05, 3.5), t = uniform(0.05, 3.5);
      const Quat kxy = kernel_closed(n, u, s, v, t).value;
      const Quat kyx = kernel_closed(n, v, t, u, s).value;
      CHECK(norm(kyx - conj(kxy)) <= 1e-10 * std::max(1.0, norm(kxy)));
      const Quat diag = kernel_closed(n, u, s, u, s + 0.5e-7).value;
      CHECK(std::abs(diag.x) + std::abs(diag.y) + std::abs(diag.z) <=
            1e-8 * std::abs(diag.w));
      CHECK(diag.w ==
            doctest::Approx(intensity_background(n, s)).epsilon(1e-6));
    }
  }

  TEST_CASE("closed form matches the direct sum") {
    for (int rep = 0; rep < 60; ++rep) {
      const int n = static_cast<int>(rng() % 10);
      const Quat u = random_direction(), v = random_direction();
      const double s = uniform(0.1, 3), t = uniform(0.1, 3);
      const Quat direct = kernel_sum(n, u * s, v * t);
      const Quat closed = kernel_closed(n, u, s, v, t).value;
      CHECK(norm(closed - direct) <= 1e-10 * std::max(1.0, norm(direct)));
    }
    CHECK_THROWS_AS((void)kernel_sum(61, qi, qj), std::domain_error);
  }

  TEST_CASE("weighted closed form differs by the gaussian factor") {
    for (int rep = 0; rep < 30; ++rep) {
      const int n = static_cast<int>(rng() % 15);
      const Quat u = random_direction(), v = random_direction();
      const double s = uniform(0.1, 4), t = uniform(0.1, 4);
      const Quat w = kernel_closed_weighted(n, u, s, v, t);
      const Quat unweighted = kernel_closed(n, u, s, v, t).value;
      const double factor = std::exp((s * s + t * t) / 4.0);
      CHECK(norm(w * factor - unweighted) <= 1e-10 * std::max(1.0, norm(unweighted)));
    }
  }

  TEST_CASE("weighted kernel stays finite at bulk radii") {
    const int n = 4000;
    const double edge = 2.0 * std::sqrt(n + 1.5);
    for (double s : {0.5, 60.0, edge - 1.0, edge, edge + 3.0}) {
      const WeightedRhoDelta wd = weighted_rho_delta(n, s, s * 0.98 + 0.01);
      CHECK(std::isfinite(wd.wrho));
      CHECK(std::isfinite(wd.wdelta));
      CHECK(std::isfinite(weighted_rho_diag(n, s)));
      const Quat w = kernel_closed_weighted(n, qi, s, qj, s * 0.98 + 0.01);
      CHECK(std::isfinite(norm(w)));
    }
    CHECK(weighted_rho_diag(n, 1.0) > 0.0);
  }

  TEST_CASE("intensity: closed coefficients, continuity at zero, normalization") {
    // rho_1(s) = (s^2 + 3)/3 and rho_2(s) = (s^4 - 4 s^2 + 15)/6.
    for (double s : {0.2, 1.0, 2.7}) {
      CHECK(intensity_background(1, s) ==
            doctest::Approx((s * s + 3) / 3.0).epsilon(1e-12));
      CHECK(intensity_background(2, s) ==
            doctest::Approx((std::pow(s, 4) - 4 * s * s + 15) / 6.0).epsilon(1e-12));
    }
    const std::vector<BigRat> c1 = rho_poly_coeffs(1);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0] == BigRat(1));
    CHECK(c1[1] == BigRat(0));
    CHECK(c1[2] == BigRat(1, 3));
    const std::vector<BigRat> c2 = rho_poly_coeffs(2);
    REQUIRE(c2.size() == 5);
    CHECK(c2[0] == BigRat(5, 2));
    CHECK(c2[2] == BigRat(-2, 3));
    CHECK(c2[4] == BigRat(1, 6));
    // Lebesgue intensity is continuous (and finite) through the origin.
    for (int n : {0, 1, 2, 5, 8}) {
      const double at0 = intensity_lebesgue(n, Quat::pure(0, 0, 0));
      const double near0 = intensity_lebesgue(n, Quat::pure(1e-6, 0, 0));
      CHECK(std::isfinite(at0));
      CHECK(at0 == doctest::Approx(near0).epsilon(1e-8));
      CHECK(intensity_lebesgue_radial(n, 1e-7) ==
            doctest::Approx(at0).epsilon(1e-8));
    }
    // Total expected number of points is n + 1.
    for (int n : {0, 1, 2, 7}) {
      const double hi = 2.0 * std::sqrt(n + 1.5) + 6.0;
      const int m = 20000;  // even, Simpson's rule
      double mass = 0.0;
      for (int i = 0; i <= m; ++i) {
        const double r = hi * i / m;
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        mass += w * radial_density(n, r);
      }
      mass *= hi / (3.0 * m);
      CHECK(mass == doctest::Approx(n + 1.0).epsilon(1e-6));
    }
  }

  TEST_CASE("pair correlation: symmetry, positivity, moore agreement") {
    for (int rep = 0; rep < 200; ++rep) {
      const int n = static_cast<int>(rng() % 10);
      const Quat x = random_direction() * uniform(0.05, 3.0);
      const Quat y = random_direction() * uniform(0.05, 3.0);
      const double p2 = pair_correlation(n, x, y);
      const double scale =
          intensity_background(n, norm(x)) * intensity_background(n, norm(y));
      CHECK(p2 >= -1e-9 * scale);
      CHECK(pair_correlation(n, y, x) == doctest::Approx(p2).epsilon(1e-9));
      CHECK(std::abs(pair_correlation_moore(n, x, y) - p2) <= 1e-9 * scale);
    }
  }

  TEST_CASE("pair correlation reductions at aligned directions") {
    for (int rep = 0; rep < 40; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const Quat u = random_direction();
      const double s = uniform(0.2, 2.5), t = uniform(0.2, 2.5) + 3.0;
      const auto [rho_st, delta_st] = rho_delta(n, s, t);
      const double prod = intensity_background(n, s) * intensity_background(n, t);
      // Same direction: only the rho^2 term survives.
      CHECK(pair_correlation(n, u * s, u * t) ==
            doctest::Approx(prod - rho_st * rho_st).epsilon(1e-9));
      // Opposite directions: only the delta^2 term survives.
      CHECK(pair_correlation(n, u * s, -(u * t)) ==
            doctest::Approx(prod - delta_st * delta_st).epsilon(1e-9));
    }
  }

  TEST_CASE("equal radii: rank-two identity and vanishing triple determinant") {
    for (int rep = 0; rep < 60; ++rep) {
      const int n = static_cast<int>(rng() % 9);
      const double r = uniform(0.2, 2.5);
      const Quat u = random_direction(), v = random_direction();
      const double c = dot3(u, v);
      const auto [rho_rr, delta_rr] = rho_delta(n, r, r);
      const double expect =
          (rho_rr * rho_rr - delta_rr * delta_rr) * (1.0 - c) / 2.0;
      const double p2 = pair_correlation(n, u * r, v * r);
      CHECK(p2 == doctest::Approx(expect).epsilon(1e-8));
      const double g3 =
          triple_gram_det(n, u * r, v * r, random_direction() * r);
      const double scale = std::pow(intensity_background(n, r), 3);
      CHECK(std::abs(g3) <= 1e-9 * scale);
    }
    CHECK_THROWS_AS(
        (void)triple_gram_det(2, qi * 1.0, qj * 1.0, qk * 1.5),
        std::invalid_argument);
  }

  TEST_CASE("rho and delta are symmetric in their radii") {
    for (int rep = 0; rep < 30; ++rep) {
      const int n = static_cast<int>(rng() % 12);
      const double s = uniform(0.05, 4), t = uniform(0.05, 4);
      const auto [r1, d1] = rho_delta(n, s, t);
      const auto [r2, d2] = rho_delta(n, t, s);
      CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
      CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
    }
  }

  TEST_CASE("christoffel-darboux residual is small") {
    for (int rep = 0; rep < 25; ++rep) {
      const int n = static_cast<int>(rng() % 12);
      const Quat x = random_direction() * uniform(0.1, 2.5);
      const Quat y = random_direction() * uniform(0.1, 2.5);
      const CdResidual r = cd_residual(n, x, y);
      CHECK(r.residual <= 1e-10 * r.scale);
    }
  }
}
