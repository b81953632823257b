#include "qpf/polynomials.hpp"

#include <cmath>
#include <stdexcept>

namespace qpf {

BigInt h_norm(int n) {
  if (n < 0) throw std::domain_error("h_norm: negative index");
  return n % 2 == 1 ? factorial(n) * (n + 2) : factorial(n + 1);
}

BigInt beta_coeff(int n) {
  if (n < 1) throw std::domain_error("beta_coeff: index must be >= 1");
  return n % 2 == 1 ? BigInt(n + 2) : BigInt(n);
}

namespace {

// Three-term build-up c_{k+1}(z) = z c_k(z) + sgn * beta_k c_{k-1}(z).
std::vector<BigInt> recurrence_poly(int n, int sgn) {
  std::vector<BigInt> prev{1};  // degree 0
  if (n == 0) return prev;
  std::vector<BigInt> cur{0, 1};  // degree 1: z
  for (int k = 1; k < n; ++k) {
    std::vector<BigInt> next(k + 2, BigInt(0));
    for (int i = 0; i <= k; ++i) next[i + 1] = cur[i];
    BigInt b = beta_coeff(k) * sgn;
    for (size_t i = 0; i < prev.size(); ++i) next[i] += b * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<BigInt> p_poly(int n) { return recurrence_poly(n, +1); }
std::vector<BigInt> q_poly(int n) { return recurrence_poly(n, -1); }

std::vector<BigInt> hermite_monic(int n) {
  std::vector<BigInt> prev{1};
  if (n == 0) return prev;
  std::vector<BigInt> cur{0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<BigInt> next(k + 2, BigInt(0));
    for (int i = 0; i <= k; ++i) next[i + 1] = cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= BigInt(k) * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double eval_poly(const std::vector<BigInt>& coeff, double x) {
  double acc = 0;
  for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + static_cast<double>(coeff[i]);
  return acc;
}

double eval_poly(const std::vector<BigRat>& coeff, double x) {
  double acc = 0;
  for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + static_cast<double>(coeff[i]);
  return acc;
}

Quat eval_poly(const std::vector<BigInt>& coeff, const Quat& z) {
  Quat acc{};
  for (size_t i = coeff.size(); i-- > 0;)
    acc = acc * z + Quat::real(static_cast<double>(coeff[i]));
  return acc;
}

std::vector<BigInt> derivative(const std::vector<BigInt>& coeff) {
  if (coeff.size() <= 1) return {BigInt(0)};
  std::vector<BigInt> d(coeff.size() - 1);
  for (size_t i = 1; i < coeff.size(); ++i) d[i - 1] = coeff[i] * BigInt(i);
  return d;
}

namespace {

// u^n for a unit pure quaternion: u^2 = -1.
Quat unit_power(const Quat& u, int n) {
  double sgn = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  return n % 2 == 0 ? Quat::real(sgn) : u * sgn;
}

}  // namespace

Quat p_eval_hermite(int n, const Quat& u, double s) {
  if (s <= 0) throw std::domain_error("p_eval_hermite: requires s > 0");
  double hn1 = eval_poly(hermite_monic(n + 1), s);
  Quat un = unit_power(u, n);
  if (n % 2 == 0) return un * (hn1 / s);
  double hn = eval_poly(hermite_monic(n), s);
  return un * ((s * hn1 + hn) / (s * s));
}

namespace {

constexpr double kRescaleHi = 1e150;
constexpr double kRescaleLo = 1e-150;
constexpr double kLogHi = 345.3877639491069;  // log(1e150)

// Rescale a bank of mantissas sharing one log offset so the largest magnitude
// stays inside [1e-150, 1e150]; keeps long products of e^{-s^2/4}-scaled
// recurrences inside double range.
void renorm(double* vals, int count, double& logs) {
  double m = 0;
  for (int i = 0; i < count; ++i) m = std::max(m, std::abs(vals[i]));
  if (m > kRescaleHi) {
    for (int i = 0; i < count; ++i) vals[i] *= kRescaleLo;
    logs += kLogHi;
  } else if (m > 0 && m < kRescaleLo) {
    for (int i = 0; i < count; ++i) vals[i] *= kRescaleHi;
    logs -= kLogHi;
  }
}

}  // namespace

PsiPair weighted_hermite_pair(int n, double x) {
  // psi_0 = e^{-x^2/4}, psi_1 = x e^{-x^2/4}; mantissas start at the weight's log.
  double logs = -x * x / 4;
  double pm = 1.0, cm = x;  // psi_0, psi_1 mantissas
  for (int k = 1; k <= n; ++k) {
    double next = (x * cm - std::sqrt(double(k)) * pm) / std::sqrt(double(k + 1));
    pm = cm;
    cm = next;
    double bank[2] = {pm, cm};
    renorm(bank, 2, logs);
    pm = bank[0];
    cm = bank[1];
  }
  double f = std::exp(logs);
  return {pm * f, cm * f};
}

double weighted_q(int n, double s) {
  if (std::abs(s) < 1e-4) return weighted_q_state(n, s).qn;
  PsiPair p = weighted_hermite_pair(n, s);
  if (n % 2 == 0) return p.n1 / s;
  // h_n = n!(n+2):  (s H_{n+1} + H_n) e^{-s^2/4} / (s^2 sqrt(h_n))
  //               = (s sqrt(n+1) psi_{n+1} + psi_n) / (s^2 sqrt(n+2))
  return (s * std::sqrt(double(n + 1)) * p.n1 + p.n) / (s * s * std::sqrt(double(n + 2)));
}

WeightedQState weighted_q_state(int n, double s) {
  double logs = -s * s / 4;
  // g_0 = e^{-s^2/4}, g_1 = s g_0 / sqrt(beta_1); v tracks the Q-derivative.
  double gp = 1.0, gc = s / std::sqrt(3.0);
  double vp = 0.0, vc = 1.0 / std::sqrt(3.0);
  for (int k = 1; k <= n; ++k) {
    double bk = std::sqrt(double(k % 2 == 1 ? k + 2 : k));
    double bk1 = std::sqrt(double(k % 2 == 0 ? k + 3 : k + 1));  // beta_{k+1}
    double gn = (s * gc - bk * gp) / bk1;
    double vn = (gc + s * vc - bk * vp) / bk1;
    gp = gc;
    gc = gn;
    vp = vc;
    vc = vn;
    double bank[4] = {gp, gc, vp, vc};
    renorm(bank, 4, logs);
    gp = bank[0];
    gc = bank[1];
    vp = bank[2];
    vc = bank[3];
  }
  double f = std::exp(logs);
  return {gp * f, gc * f, vp * f, vc * f};
}

std::vector<double> q_zeros(int n) {
  if (n < 1 || n > 40) throw std::domain_error("q_zeros: supported range is 1..40");
  auto f = [n](double s) { return weighted_q_state(n, s).qn; };
  double lim = 2 * std::sqrt(double(n + 2));
  int grid = 10 * n;
  std::vector<double> roots;
  double x0 = -lim, f0 = f(x0);
  for (int i = 1; i <= grid; ++i) {
    double x1 = -lim + 2 * lim * i / grid;
    double f1 = f(x1);
    if (f0 == 0) roots.push_back(x0);
    if (f0 * f1 < 0) {
      double a = x0, b = x1, fa = f0;
      while (b - a > 1e-12) {
        double m = (a + b) / 2, fm = f(m);
        if (fm == 0) {
          a = b = m;
          break;
        }
        if (fa * fm < 0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      roots.push_back((a + b) / 2);
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0) roots.push_back(x0);
  return roots;
}

std::string poly_to_string(const std::vector<BigInt>& coeff, const std::string& var) {
  std::string out;
  for (size_t i = coeff.size(); i-- > 0;) {
    if (coeff[i] == 0) continue;
    BigInt c = coeff[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    bool unit = (c == 1);
    if (!unit || i == 0) out += c.str();
    if (i >= 1) {
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qpf
