#include "specwave/approx.hpp"

#include <cmath>
#include <stdexcept>

namespace specwave {

namespace {
// f_n and every pair sum underflow to exact 0 well inside this range.
constexpr int kExtSize = 1024;
}  // namespace

FrequencyContext::FrequencyContext(std::int64_t k_value) : k(k_value) {
  if (k < 1) throw std::invalid_argument("FrequencyContext: k must be >= 1");
}

ApproxCoefficients::ApproxCoefficients(double q, int n_f) : q_(q), n_f_(n_f) {
  if (!(q > 0.013 && q < 0.015))
    throw std::domain_error("ApproxCoefficients: q outside the root bracket (0.013, 0.015)");
  if (n_f < 4) throw std::invalid_argument("ApproxCoefficients: N_f must be >= 4");
  if (n_f >= kExtSize / 2)
    throw std::invalid_argument("ApproxCoefficients: N_f beyond table capacity");

  sqrt_q_ = std::sqrt(q_);
  q_pow_.resize(kExtSize);
  q_pow_[0] = 1.0;
  for (int i = 1; i < kExtSize; ++i) q_pow_[i] = q_pow_[i - 1] * q_;

  f_ext_.resize(kExtSize);
  for (int n = 0; n < kExtSize; ++n) {
    const double q2n1 = (2 * n + 1 < kExtSize) ? q_pow_[2 * n + 1] : 0.0;
    f_ext_[n] = q_pow_[n] * sqrt_q_ / (1.0 + q2n1);
  }

  t_table_.resize(kExtSize, 0.0);
  for (int a = 0; a < kExtSize; ++a) {
    double s = 0.0;
    for (int j = 0; j + a < kExtSize; ++j) {
      const double term = f_ext_[j] * f_ext_[j + a];
      if (term == 0.0) break;  // underflow floor; later terms only smaller
      s += term;
    }
    t_table_[a] = s;
  }

  u_table_.resize(kExtSize, 0.0);
  for (int a = 1; a < kExtSize; ++a) {
    double s = 0.0;
    for (int j = 0; j < a; ++j) s += f_ext_[j] * f_ext_[a - 1 - j];
    u_table_[a] = s;
  }

  f_.assign(f_ext_.begin(), f_ext_.begin() + n_f_ + 1);
  for (int n = 0; n + 1 <= n_f_; ++n)
    if (!(f_[n + 1] > 0.0 && f_[n + 1] < f_[n]))
      throw std::runtime_error("ApproxCoefficients: f sequence not strictly decreasing");

  const double f0 = f_[0];
  beta0_ = 4.0 * t_table_[0] + 2.0 * t_table_[1] + 5.0 * f0 * f0;
  beta1_ = 2.0 * t_table_[1] + 3.0 * f0 * f0;
  if (!(beta0_ > 113.0 / 1000.0 && beta0_ < 135.0 / 1000.0))
    throw std::runtime_error("ApproxCoefficients: beta0 outside certified interval");
  if (!(beta1_ > 38.0 / 1000.0 && beta1_ < 45.0 / 1000.0))
    throw std::runtime_error("ApproxCoefficients: beta1 outside certified interval");

  f_tail_bound_ = q_pow_[n_f_ + 1] * sqrt_q_ / (1.0 - q_);
}

double ApproxCoefficients::f_extended(int n) const {
  if (n < 0) throw std::domain_error("f_extended: negative index");
  return n < kExtSize ? f_ext_[n] : 0.0;
}

double ApproxCoefficients::q_power(int e) const {
  if (e < 0) throw std::domain_error("q_power: negative exponent");
  return e < kExtSize ? q_pow_[e] : 0.0;
}

double ApproxCoefficients::q_power_half(int e) const { return q_power(e) * sqrt_q_; }

double ApproxCoefficients::t_sum(int a) const {
  if (a < 0) throw std::domain_error("t_sum: negative index");
  return a < kExtSize ? t_table_[a] : 0.0;
}

double ApproxCoefficients::u_sum(int a) const {
  if (a < 0) throw std::domain_error("u_sum: negative index");
  return a < kExtSize ? u_table_[a] : 0.0;
}

ApproxCoefficients build_coeffs(double q, int n_f) { return ApproxCoefficients(q, n_f); }

SpectralField build_uk(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                       const WeightConfig& weight) {
  SpectralField u(weight);
  const double amp = std::sqrt(128.0 / static_cast<double>(ctx.k));
  for (int n = 0; n <= coeffs.cutoff(); ++n) u.set(n, n, amp * coeffs.f()[n]);

  const double rho4q = weight.power(4) * coeffs.q();
  u.set_tail(amp * weight.power(4 * coeffs.cutoff() + 6) *
             coeffs.q_power_half(coeffs.cutoff() + 1) / (1.0 - rho4q));
  return u;
}

SpectralField build_uk(const FrequencyContext& ctx, const ApproxCoefficients& coeffs) {
  return build_uk(ctx, coeffs, WeightConfig());
}

double b_coeff(int m, int n, const ApproxCoefficients& coeffs) {
  if (m < 0 || n < 0) throw std::domain_error("b_coeff: indices must be non-negative");
  if (m == n) {
    const double odd = 2.0 * m + 1.0;
    return odd * odd * coeffs.f_extended(m) / 128.0;
  }
  const int M = m > n ? m : n;
  const int N = m > n ? n : m;
  const int d = M - N;
  const double qM = coeffs.q_power_half(M);
  if (d % 2 == 0) {
    const double bracket =
        1.0 - coeffs.q_power(d) + coeffs.q_power(M + N + 1) - coeffs.q_power(2 * M + 1);
    return (3.0 / 32.0) * d * qM / bracket;
  }
  const double bracket =
      1.0 + coeffs.q_power(d) - coeffs.q_power(M + N + 1) - coeffs.q_power(2 * M + 1);
  return -(3.0 / 32.0) * (M + N + 1) * qM / bracket;
}

double c_coeff(int mu, int nu, const FrequencyContext& ctx,
               const ApproxCoefficients& coeffs) {
  const int a = mu < 0 ? -mu : mu;
  const int b = nu < 0 ? -nu : nu;
  const double pref = 128.0 / static_cast<double>(ctx.k);

  if (a == 0 && b == 0) return pref * 0.25 * coeffs.f2_sum();
  if (a == b) return pref * (2.0 * coeffs.t_sum(a) + coeffs.u_sum(a)) / 16.0;
  if (a == 0 || b == 0) {
    const int c = a + b;  // the nonzero one
    if (c % 2 == 0) return 0.0;
    const double fc = coeffs.f_extended((c - 1) / 2);
    return -pref * fc * fc / 8.0;
  }
  if ((a - b) % 2 == 0) return 0.0;
  const int diff = a > b ? a - b : b - a;
  return -pref * coeffs.f_extended((a + b - 1) / 2) * coeffs.f_extended((diff - 1) / 2) / 8.0;
}

}  // namespace specwave
