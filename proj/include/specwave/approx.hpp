#pragma once

// First-order approximate solution u_k and the closed-form coefficient
// families derived from it:
//
//   u_k(tau,x) = sqrt(128/k) sum_n f_n P_{n,n},   f_n = q^{n+1/2}/(1+q^{2n+1}),
//
//   u_k^3 = (1024 sqrt(2)/k^{3/2}) sum b_{m,n} P_{m,n},
//   u_k^2 P_{m,n} = sum_{mu,nu} c_{mu,nu} P_{mu+m,nu+n}.
//
// b and c come from sine-product algebra on the diagonal modes of u_k; both
// are evaluated through q-power forms that stay stable for large indices
// (the hyperbolic-sine quotients they are equivalent to overflow long before
// the indices of interest).

#include <cstdint>
#include <vector>

#include "specwave/field.hpp"

namespace specwave {

// Frequency parametrization Omega = (2k+1)/(2k), exact in integers.
struct FrequencyContext {
  std::int64_t k;

  explicit FrequencyContext(std::int64_t k_value);

  std::int64_t omega_num() const { return 2 * k + 1; }
  std::int64_t omega_den() const { return 2 * k; }
  double omega() const {
    return static_cast<double>(omega_num()) / static_cast<double>(omega_den());
  }
};

// Coefficient record: f_0..f_{N_f} plus the derived constants
//   beta0 = 4 sum f_j^2 + 2 sum f_j f_{j+1} + 5 f_0^2,
//   beta1 = 2 sum f_j f_{j+1} + 3 f_0^2.
// Internally the f sequence and the pair sums it generates are tabulated far
// beyond N_f (until double underflow), so b/c lookups are O(1) regardless of
// index; entries past the table are exact zeros in double precision.
class ApproxCoefficients {
 public:
  ApproxCoefficients(double q, int n_f);

  double q() const { return q_; }
  int cutoff() const { return n_f_; }
  const std::vector<double>& f() const { return f_; }
  double beta0() const { return beta0_; }
  double beta1() const { return beta1_; }
  // Geometric majorant for sum_{n > N_f} f_n, from f_n < q^{n+1/2}.
  double f_tail_bound() const { return f_tail_bound_; }

  // Extended lookups used by the closed forms. Indices beyond the internal
  // table return 0 (the true values underflow doubles).
  double f_extended(int n) const;
  double q_power(int e) const;         // q^e
  double q_power_half(int e) const;    // q^{e+1/2}
  double t_sum(int a) const;           // sum_j f_j f_{j+a}
  double u_sum(int a) const;           // sum_{j=0}^{a-1} f_j f_{a-1-j}
  double f2_sum() const { return t_table_.empty() ? 0.0 : t_table_[0]; }

 private:
  double q_ = 0.0;
  int n_f_ = 0;
  std::vector<double> f_;
  double beta0_ = 0.0;
  double beta1_ = 0.0;
  double f_tail_bound_ = 0.0;
  double sqrt_q_ = 0.0;
  std::vector<double> q_pow_;
  std::vector<double> f_ext_;
  std::vector<double> t_table_;
  std::vector<double> u_table_;
};

// Validates q against the root bracket (0.013, 0.015) and N_f >= 4, then
// tabulates everything. Throws std::domain_error for q out of range,
// std::invalid_argument for too-small N_f, std::runtime_error if the derived
// betas land outside their certified intervals (cannot happen for valid q).
ApproxCoefficients build_coeffs(double q, int n_f);

// Diagonal field sqrt(128/k) f_n P_{n,n}, n <= N_f, with the dropped modes
// covered by the tail budget sqrt(128/k) rho^{4N_f+6} q^{N_f+3/2}/(1-rho^4 q).
SpectralField build_uk(const FrequencyContext& ctx, const ApproxCoefficients& coeffs);
SpectralField build_uk(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                       const WeightConfig& weight);

// Cube coefficient b_{m,n}; u_k^3 = (1024 sqrt(2)/k^{3/2}) sum b_{m,n} P_{m,n}.
// Case split: diagonal (2m+1)^2 f_m/128; off-diagonal quotients with
// denominators written as q-power brackets, e.g. for M = max(m,n),
// N = min(m,n) and M-N odd,
//   b = -(3/32) (M+N+1) q^{M+1/2} / (1 + q^{M-N} - q^{M+N+1} - q^{2M+1}).
double b_coeff(int m, int n, const ApproxCoefficients& coeffs);

// Shift coefficient c_{mu,nu} of u_k^2 P_{m,n} (independent of (m,n)).
// Depends only on |mu|,|nu|; zero when the shift parity is even off the
// diagonal and axes.
double c_coeff(int mu, int nu, const FrequencyContext& ctx,
               const ApproxCoefficients& coeffs);

inline constexpr int kDefaultNf = 32;

}  // namespace specwave
