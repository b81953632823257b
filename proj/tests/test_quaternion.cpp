#include <cmath>
#include <complex>

#include "doctest.h"
#include "qpf/quaternion.hpp"

using namespace qpf;

namespace {

Quat make(double w, double x, double y, double z) { return Quat{w, x, y, z}; }

bool close(const Quat& a, const Quat& b, double tol = 1e-12) { return norm(a - b) <= tol; }

}  // namespace

TEST_SUITE("quaternion") {
  TEST_CASE("hamilton multiplication table") {
    const Quat one = Quat::real(1), i = Quat::pure(1, 0, 0), j = Quat::pure(0, 1, 0),
               k = Quat::pure(0, 0, 1);
    CHECK(close(i * j, k));
    CHECK(close(j * k, i));
    CHECK(close(k * i, j));
    CHECK(close(j * i, -k));
    CHECK(close(i * i, -one));
    CHECK(close(j * j, -one));
    CHECK(close(k * k, -one));
    CHECK(close(one * i, i));
  }

  TEST_CASE("norm is multiplicative and inverse works") {
    const Quat a = make(0.3, -1.2, 0.7, 2.0), b = make(-0.5, 0.1, 1.4, -0.3);
    CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    CHECK(close(a * inverse(a), Quat::real(1), 1e-14));
    CHECK(close(inverse(a) * a, Quat::real(1), 1e-14));
    CHECK_THROWS_AS((void)inverse(Quat{}), std::domain_error);
  }

  TEST_CASE("conjugation reverses products") {
    const Quat a = make(1.0, 2.0, -0.5, 0.25), b = make(-0.7, 0.2, 1.1, 0.6);
    CHECK(close(conj(a * b), conj(b) * conj(a)));
    CHECK(norm_sq(a) == doctest::Approx((a * conj(a)).w));
  }

  TEST_CASE("polar decomposition") {
    const Quat x = Quat::pure(1.0, -2.0, 2.0);  // |x| = 3
    const Polar p = polar(x);
    CHECK(p.s == doctest::Approx(3.0));
    CHECK(norm(p.u) == doctest::Approx(1.0));
    CHECK(close(p.u * p.s, x, 1e-12));
    const Polar zero = polar(Quat{});
    CHECK(zero.s == 0.0);
    CHECK(norm(zero.u) == doctest::Approx(1.0));
  }

  TEST_CASE("adjoint action rotates pure quaternions") {
    const double r = 1.0 / std::sqrt(2.0);
    const Quat q = make(r, r, 0, 0);  // rotation by pi/2 about i
    const Quat j = Quat::pure(0, 1, 0), k = Quat::pure(0, 0, 1);
    CHECK(close(adjoint_action(q, j), k, 1e-12));
    CHECK(close(adjoint_action(q, k), -j, 1e-12));
    const Quat x = Quat::pure(0.3, -0.4, 1.2);
    const Quat y = adjoint_action(q, x);
    CHECK(norm(y) == doctest::Approx(norm(x)));
    CHECK(y.w == doctest::Approx(0.0).epsilon(1e-14));
    // Multiplicativity of the action.
    const Quat a = make(0.2, 0.5, -0.1, 0.8), b = make(1.0, -0.3, 0.4, 0.2);
    CHECK(close(adjoint_action(q, a * b), adjoint_action(q, a) * adjoint_action(q, b), 1e-12));
  }

  TEST_CASE("complex embedding is a homomorphism") {
    const Quat a = make(0.5, -1.0, 0.75, 2.0), b = make(-0.25, 0.5, 1.5, -1.0);
    const ComplexEmbedding ea = embed(a), eb = embed(b), eab = embed(a * b);
    // 2x2 complex product of ea and eb.
    const std::complex<double> pa = ea.a * eb.a + ea.b * eb.c;
    const std::complex<double> pb = ea.a * eb.b + ea.b * eb.d;
    const std::complex<double> pc = ea.c * eb.a + ea.d * eb.c;
    const std::complex<double> pd = ea.c * eb.b + ea.d * eb.d;
    CHECK(std::abs(pa - eab.a) < 1e-12);
    CHECK(std::abs(pb - eab.b) < 1e-12);
    CHECK(std::abs(pc - eab.c) < 1e-12);
    CHECK(std::abs(pd - eab.d) < 1e-12);
    // Trace gives twice the real part, determinant the squared norm.
    CHECK(std::abs((ea.a + ea.d) - std::complex<double>(2 * a.w, 0)) < 1e-12);
    CHECK(std::abs((ea.a * ea.d - ea.b * ea.c) - std::complex<double>(norm_sq(a), 0)) < 1e-12);
  }

  TEST_CASE("dot product of vector parts") {
    CHECK(dot3(Quat::pure(1, 2, 3), Quat::pure(-4, 5, 6)) == doctest::Approx(24.0));
    CHECK(dot3(Quat::pure(1, 0, 0), Quat::pure(0, 1, 0)) == doctest::Approx(0.0));
  }
}
