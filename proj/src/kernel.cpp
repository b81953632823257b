#include "qpf/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "qpf/moore.hpp"

namespace qpf {

namespace {

constexpr double kSmallRadius = 1e-4;  // below this, 1/s assemblies are avoided

// Switching width between the two-point and confluent branches of
// weighted_rho_delta.  The two-point form loses ~|eps_mach / (t - s)| relative
// accuracy to cancellation, the midpoint confluent form is O(|t - s|^2)
// accurate; both error curves stay below ~3e-10 for n <= 20 when the switch
// sits at 1e-5.
double seam_width(double s) { return 1e-5 * std::max(1.0, s); }

void require_positive_radii(double s, double t) {
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("kernel: radii must be positive");
}

void require_unit(const Quat& u) {
  if (std::abs(norm(u) - 1.0) > 1e-9) throw std::domain_error("kernel: direction must be unit");
}

double sqrt_beta(int n) { return std::sqrt(beta_coeff(n).convert_to<double>()); }

}  // namespace

namespace {

// Extended-precision quaternion Horner: the raw coefficients alternate in sign
// and cancel, so double arithmetic can lose ~1e-9 relative accuracy by k = 20.
struct LQuat {
  long double w = 0, x = 0, y = 0, z = 0;
};

LQuat lmul(const LQuat& a, const LQuat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

LQuat leval(const std::vector<BigInt>& coeff, const LQuat& z) {
  LQuat acc;
  for (size_t i = coeff.size(); i-- > 0;) {
    acc = lmul(acc, z);
    acc.w += coeff[i].convert_to<long double>();
  }
  return acc;
}

}  // namespace

Quat kernel_sum(int n, const Quat& x, const Quat& y) {
  if (n < 0) throw std::domain_error("kernel_sum: n must be >= 0");
  if (n > 60) throw std::domain_error("kernel_sum: raw coefficients unusable beyond n = 60; use kernel_closed");
  const LQuat lx{0, x.x, x.y, x.z}, ly{0, y.x, y.y, y.z};
  LQuat acc;
  for (int k = 0; k <= n; ++k) {
    const std::vector<BigInt> pk = p_poly(k);
    const LQuat px = leval(pk, lx);
    LQuat py = leval(pk, ly);
    py.x = -py.x;
    py.y = -py.y;
    py.z = -py.z;
    const LQuat term = lmul(px, py);
    const long double inv_h = 1.0L / h_norm(k).convert_to<long double>();
    acc.w += term.w * inv_h;
    acc.x += term.x * inv_h;
    acc.y += term.y * inv_h;
    acc.z += term.z * inv_h;
  }
  return {static_cast<double>(acc.w), static_cast<double>(acc.x),
          static_cast<double>(acc.y), static_cast<double>(acc.z)};
}

WeightedRhoDelta weighted_rho_delta(int n, double s, double t) {
  if (n < 0) throw std::domain_error("weighted_rho_delta: n must be >= 0");
  if (s < 0.0 || t < 0.0) throw std::domain_error("weighted_rho_delta: radii must be >= 0");
  const double sb = sqrt_beta(n + 1);
  if (std::abs(t - s) > seam_width(s)) {
    // Two-point closed form, as a difference of weighted products.
    const double qn_s = weighted_q(n, s), qn1_s = weighted_q(n + 1, s);
    const double qn_t = weighted_q(n, t), qn1_t = weighted_q(n + 1, t);
    const double fwd = qn_s * qn1_t, rev = qn1_s * qn_t;
    return {sb * (fwd - rev) / (t - s), sb * (fwd + rev) / (t + s)};
  }
  // Confluent forms at the midpoint; O(|t-s|^2) from the true two-point value.
  const double m = 0.5 * (s + t);
  const WeightedQState st = weighted_q_state(n, m);
  const double wrho = sb * (st.qn * st.dqn1 - st.qn1 * st.dqn);
  const double wdelta = m < kSmallRadius ? sb * (st.qn * st.dqn1 + st.qn1 * st.dqn)
                                         : sb * st.qn * st.qn1 / m;
  return {wrho, wdelta};
}

double weighted_rho_diag(int n, double s) {
  if (s < 0.0) throw std::domain_error("weighted_rho_diag: radius must be >= 0");
  const WeightedQState st = weighted_q_state(n, s);
  return sqrt_beta(n + 1) * (st.qn * st.dqn1 - st.qn1 * st.dqn);
}

double weighted_delta_diag(int n, double s) {
  if (s < 0.0) throw std::domain_error("weighted_delta_diag: radius must be >= 0");
  const WeightedQState st = weighted_q_state(n, s);
  if (s < kSmallRadius) return sqrt_beta(n + 1) * (st.qn * st.dqn1 + st.qn1 * st.dqn);
  return sqrt_beta(n + 1) * st.qn * st.qn1 / s;
}

std::pair<double, double> rho_delta(int n, double s, double t) {
  require_positive_radii(s, t);
  const WeightedRhoDelta w = weighted_rho_delta(n, s, t);
  const double unweight = std::exp(0.25 * (s * s + t * t));
  return {w.wrho * unweight, w.wdelta * unweight};
}

KernelValue kernel_closed(int n, const Quat& u, double s, const Quat& v, double t) {
  require_positive_radii(s, t);
  require_unit(u);
  require_unit(v);
  const auto [rho, delta] = rho_delta(n, s, t);
  const int sign = (n % 2 == 0) ? 1 : -1;
  const Quat uv = u * v;
  const Quat one = Quat::real(1.0);
  const Quat value = (one - uv) * (0.5 * rho) + (one + uv) * (0.5 * sign * delta);
  return {value, rho, delta, sign, dot3(u, v)};
}

Quat kernel_closed_weighted(int n, const Quat& u, double s, const Quat& v, double t) {
  require_unit(u);
  require_unit(v);
  const WeightedRhoDelta w = weighted_rho_delta(n, s, t);
  const int sign = (n % 2 == 0) ? 1 : -1;
  const Quat uv = u * v;
  const Quat one = Quat::real(1.0);
  return (one - uv) * (0.5 * w.wrho) + (one + uv) * (0.5 * sign * w.wdelta);
}

CdResidual cd_residual(int n, const Quat& x, const Quat& y) {
  if (n < 0 || n > 59) throw std::domain_error("cd_residual: requires 0 <= n <= 59");
  const Quat k = kernel_sum(n, x, y);
  const Quat lhs = x * k + k * conj(y);
  const std::vector<BigInt> pn = p_poly(n), pn1 = p_poly(n + 1);
  const double hn = h_norm(n).convert_to<double>();
  const Quat rhs = (eval_poly(pn1, x) * conj(eval_poly(pn, y)) +
                    eval_poly(pn, x) * conj(eval_poly(pn1, y))) *
                   (1.0 / hn);
  const double scale = norm(rhs) + norm(x * k) + norm(k * conj(y));
  return {norm(lhs - rhs), scale};
}

double intensity_background(int n, double s) {
  if (!(s > 0.0)) throw std::domain_error("intensity_background: radius must be positive");
  return weighted_rho_diag(n, s) * std::exp(0.5 * s * s);
}

double intensity_lebesgue_radial(int n, double r) {
  constexpr double kTwoPiPow = 15.749609945722419;  // (2 pi)^{3/2}
  return weighted_rho_diag(n, r) / kTwoPiPow;
}

double intensity_lebesgue(int n, const Quat& x) { return intensity_lebesgue_radial(n, norm(x)); }

double radial_density(int n, double r) {
  if (r < 0.0) throw std::domain_error("radial_density: radius must be >= 0");
  return 4.0 * M_PI * r * r * intensity_lebesgue_radial(n, r);
}

double pair_correlation(int n, const Quat& x, const Quat& y) {
  const double s = norm(x), t = norm(y);
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("pair_correlation: points must be nonzero");
  const double cos_a = dot3(x, y) / (s * t);
  const WeightedRhoDelta w = weighted_rho_delta(n, s, t);
  const double weighted = weighted_rho_diag(n, s) * weighted_rho_diag(n, t) -
                          (w.wrho * w.wrho * 0.5 * (1.0 + cos_a) +
                           w.wdelta * w.wdelta * 0.5 * (1.0 - cos_a));
  return weighted * std::exp(0.5 * (s * s + t * t));
}

double pair_correlation_moore(int n, const Quat& x, const Quat& y) {
  const Polar px = polar(x), py = polar(y);
  SelfDualMatrix m(2);
  m.at(0, 0) = Quat::real(intensity_background(n, px.s));
  m.at(1, 1) = Quat::real(intensity_background(n, py.s));
  m.at(0, 1) = kernel_closed(n, px.u, px.s, py.u, py.s).value;
  m.at(1, 0) = conj(m.at(0, 1));
  return moore_det(m);
}

double triple_gram_det(int n, const Quat& x1, const Quat& x2, const Quat& x3) {
  const Polar p[3] = {polar(x1), polar(x2), polar(x3)};
  const double r = p[0].s;
  if (std::abs(p[1].s - r) > 1e-9 * std::max(1.0, r) ||
      std::abs(p[2].s - r) > 1e-9 * std::max(1.0, r))
    throw std::invalid_argument("triple_gram_det: points must share one radius");
  SelfDualMatrix m(3);
  for (int i = 0; i < 3; ++i) {
    m.at(i, i) = Quat::real(intensity_background(n, p[i].s));
    for (int j = i + 1; j < 3; ++j) {
      m.at(i, j) = kernel_closed(n, p[i].u, p[i].s, p[j].u, p[j].s).value;
      m.at(j, i) = conj(m.at(i, j));
    }
  }
  return moore_det(m);
}

std::vector<BigRat> rho_poly_coeffs(int n) {
  const std::vector<BigInt> qn = q_poly(n), qn1 = q_poly(n + 1);
  const std::vector<BigInt> dqn = derivative(qn), dqn1 = derivative(qn1);
  auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  std::vector<BigInt> lead = mul(qn, dqn1);
  const std::vector<BigInt> sub = mul(qn1, dqn);
  // derivative() pads constants to {0}, so the two products may differ in
  // length by one; the polynomial itself has degree exactly 2n.
  if (lead.size() < sub.size()) lead.resize(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) lead[i] -= sub[i];
  lead.resize(2 * n + 1);
  const BigInt h = h_norm(n);
  std::vector<BigRat> out(lead.size());
  for (size_t i = 0; i < lead.size(); ++i) out[i] = BigRat(lead[i], h);
  return out;
}

}  // namespace qpf
