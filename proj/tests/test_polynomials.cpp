#include <cmath>
#include <vector>

#include "doctest.h"
#include "qpf/polynomials.hpp"

using namespace qpf;

namespace {

// Coefficient-level polynomial helpers for exact identities.
std::vector<BigInt> shift_up(const std::vector<BigInt>& c, int k) {
  std::vector<BigInt> out(c.size() + k);
  for (size_t i = 0; i < c.size(); ++i) out[i + k] = c[i];
  return out;
}

std::vector<BigInt> add(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

double exact_weighted_q(int n, double s) {
  const double q = eval_poly(q_poly(n), s);
  return q * std::exp(-0.25 * s * s) / std::sqrt(h_norm(n).convert_to<double>());
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("norms and recurrence coefficients follow the parity pattern") {
    CHECK(h_norm(0) == 1);
    CHECK(h_norm(1) == 3);
    CHECK(h_norm(6) == 5040);
    CHECK(h_norm(9) == 3991680);
    for (int n = 1; n <= 25; ++n) {
      const BigInt expect = n % 2 == 1 ? factorial(n) * (n + 2) : factorial(n + 1);
      CHECK(h_norm(n) == expect);
      CHECK(beta_coeff(n) == (n % 2 == 1 ? n + 2 : n));
      CHECK(h_norm(n) == beta_coeff(n) * h_norm(n - 1));
    }
  }

  TEST_CASE("monic hermite polynomials") {
    CHECK(hermite_monic(0) == std::vector<BigInt>{1});
    CHECK(hermite_monic(2) == std::vector<BigInt>{-1, 0, 1});
    CHECK(hermite_monic(3) == std::vector<BigInt>{0, -3, 0, 1});
    CHECK(hermite_monic(4) == std::vector<BigInt>{3, 0, -6, 0, 1});
  }

  TEST_CASE("q relates to hermite exactly: x Q_n = H_{n+1} (even), x^2 Q_n = x H_{n+1} + H_n (odd)") {
    for (int n = 0; n <= 30; ++n) {
      const std::vector<BigInt> q = q_poly(n);
      const std::vector<BigInt> h1 = hermite_monic(n + 1);
      if (n % 2 == 0) {
        CHECK(shift_up(q, 1) == h1);
      } else {
        CHECK(shift_up(q, 2) == add(shift_up(h1, 1), hermite_monic(n)));
      }
    }
  }

  TEST_CASE("p and q coefficients agree up to alternating signs") {
    for (int n = 0; n <= 20; ++n) {
      const std::vector<BigInt> p = p_poly(n), q = q_poly(n);
      REQUIRE(p.size() == q.size());
      for (size_t k = n % 2; k < p.size(); k += 2) {
        BigInt expect = p[k];
        if (((n - static_cast<int>(k)) / 2) % 2 != 0) expect = -expect;
        CHECK(q[k] == expect);
      }
    }
  }

  TEST_CASE("rendering") {
    CHECK(poly_to_string(p_poly(0), "z") == "1");
    CHECK(poly_to_string(p_poly(1), "z") == "z");
    CHECK(poly_to_string(p_poly(6), "z") == "z^6+21z^4+105z^2+105");
    CHECK(poly_to_string(q_poly(6), "x") == "x^6-21x^4+105x^2-105");
  }

  TEST_CASE("weighted hermite recurrence against exact evaluation") {
    for (int n = 0; n <= 25; ++n) {
      const std::vector<BigInt> h = hermite_monic(n);
      const double root_fact = std::sqrt(factorial(n).convert_to<double>());
      for (double x : {0.0, 0.05, 0.8, 2.5, 6.0, 9.5}) {
        const double exact = eval_poly(h, x) * std::exp(-0.25 * x * x) / root_fact;
        CHECK(weighted_hermite(n, x) == doctest::Approx(exact).epsilon(1e-11));
      }
    }
  }

  TEST_CASE("weighted hermite center value at large n") {
    // |psi_{2m}(0)| = (2m-1)!!/sqrt((2m)!), via logs.
    const int n = 1000;
    double log_ratio = 0.0;  // log (n-1)!! - (1/2) log n!
    for (int k = 1; k <= n; ++k) {
      if (k % 2 == 1) log_ratio += std::log(static_cast<double>(k));
      log_ratio -= 0.5 * std::log(static_cast<double>(k));
    }
    const double expect = std::exp(log_ratio);
    CHECK(std::abs(weighted_hermite(n, 0.0)) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(weighted_hermite(n, 0.0) * (((n / 2) % 2 == 0) ? 1.0 : -1.0) > 0.0);
  }

  TEST_CASE("weighted q against exact evaluation across the small-radius switch") {
    for (int n = 0; n <= 30; ++n) {
      for (double s : {0.0, 1e-6, 5e-5, 1e-4, 2e-4, 0.4, 2.0, 5.0, 8.0}) {
        const double exact = exact_weighted_q(n, s);
        CHECK(weighted_q(n, s) == doctest::Approx(exact).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("direct recurrence state matches values and derivatives") {
    for (int n = 0; n <= 25; ++n) {
      const std::vector<BigInt> dq = derivative(q_poly(n));
      const std::vector<BigInt> dq1 = derivative(q_poly(n + 1));
      const double rn = std::sqrt(h_norm(n).convert_to<double>());
      const double rn1 = std::sqrt(h_norm(n + 1).convert_to<double>());
      for (double s : {0.0, 1e-5, 0.3, 1.7, 4.0}) {
        const WeightedQState st = weighted_q_state(n, s);
        const double damp = std::exp(-0.25 * s * s);
        CHECK(st.qn == doctest::Approx(exact_weighted_q(n, s)).epsilon(1e-10));
        CHECK(st.qn1 == doctest::Approx(exact_weighted_q(n + 1, s)).epsilon(1e-10));
        CHECK(st.dqn == doctest::Approx(eval_poly(dq, s) * damp / rn).epsilon(1e-10));
        CHECK(st.dqn1 == doctest::Approx(eval_poly(dq1, s) * damp / rn1).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("two evaluation routes agree at large n") {
    for (int n : {10, 50, 199, 1000}) {
      for (double s : {1e-3, 0.5, 3.0, 12.0, 40.0}) {
        const double via_psi = weighted_q(n, s);
        const double via_direct = weighted_q_state(n, s).qn;
        const double scale = std::max({std::abs(via_psi), std::abs(via_direct), 1e-280});
        CHECK(std::abs(via_psi - via_direct) / scale < 1e-9);
      }
    }
  }

  TEST_CASE("weighted evaluations stay finite deep in the bulk") {
    for (double s : {1e-3, 1.0, 50.0, 100.0, 141.5, 160.0}) {
      const double v = weighted_q(5000, s);
      const WeightedQState st = weighted_q_state(5000, s);
      CHECK(std::isfinite(v));
      CHECK(std::isfinite(st.qn));
      CHECK(std::isfinite(st.dqn1));
    }
  }

  TEST_CASE("hermite representation matches direct evaluation") {
    const Quat u = Quat::pure(0.6, 0.0, 0.8);
    for (int n = 0; n <= 12; ++n) {
      const Quat direct = eval_poly(p_poly(n), u * 1.7);
      const Quat via_h = p_eval_hermite(n, u, 1.7);
      CHECK(norm(via_h - direct) <= 1e-10 * norm(direct));
    }
    CHECK_THROWS_AS((void)p_eval_hermite(3, u, 0.0), std::domain_error);
  }

  TEST_CASE("zeros: known values, count, symmetry, sign change") {
    const std::vector<double> z2 = q_zeros(2);
    REQUIRE(z2.size() == 2);
    CHECK(z2[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-10));
    CHECK(z2[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    const std::vector<double> z3 = q_zeros(3);
    REQUIRE(z3.size() == 3);
    CHECK(z3[0] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-10));
    CHECK(std::abs(z3[1]) < 1e-12);
    CHECK(z3[2] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
    for (int n : {7, 20, 40}) {
      const std::vector<double> z = q_zeros(n);
      REQUIRE(z.size() == static_cast<size_t>(n));
      for (size_t i = 0; i + 1 < z.size(); ++i) {
        CHECK(z[i] < z[i + 1]);
        CHECK(z[i] == doctest::Approx(-z[z.size() - 1 - i]).epsilon(1e-9));
      }
      for (double zero : z) {
        if (std::abs(zero) < 1e-9) continue;
        const double lo = weighted_q(n, std::abs(zero) - 1e-7);
        const double hi = weighted_q(n, std::abs(zero) + 1e-7);
        CHECK(lo * hi <= 0.0);
      }
    }
    CHECK_THROWS_AS((void)q_zeros(0), std::domain_error);
    CHECK_THROWS_AS((void)q_zeros(41), std::domain_error);
  }

  TEST_CASE("domain guards") {
    CHECK_THROWS_AS((void)beta_coeff(0), std::domain_error);
    CHECK_THROWS_AS((void)h_norm(-1), std::domain_error);
  }
}
