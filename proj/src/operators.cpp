#include "specwave/operators.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "specwave/triple_product.hpp"

namespace specwave {

namespace {

__int128 eigenvalue_numerator(std::int64_t k, int m, int n) {
  const __int128 kk = k;
  const __int128 tm = 2 * static_cast<__int128>(m) + 1;
  const __int128 tn = 2 * static_cast<__int128>(n) + 1;
  return 4 * kk * kk * tn * tn - (2 * kk + 1) * (2 * kk + 1) * tm * tm;
}

}  // namespace

double l_eigenvalue(const FrequencyContext& ctx, int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("l_eigenvalue: indices must be non-negative");
  const double num = static_cast<double>(eigenvalue_numerator(ctx.k, m, n));
  const double den = 4.0 * static_cast<double>(ctx.k) * static_cast<double>(ctx.k);
  return num / den;
}

SpectralField apply_L(const FrequencyContext& ctx, const SpectralField& v) {
  SpectralField out(v.weight());
  double max_abs = 1.0;
  for (const auto& [mode, c] : v.coeffs()) {
    const double lam = l_eigenvalue(ctx, mode.m, mode.n);
    const double a = std::abs(lam);
    if (a > max_abs) max_abs = a;
    out.set(mode.m, mode.n, lam * c);
  }
  out.set_tail(v.tail_budget() * max_abs);
  return out;
}

SpectralField apply_L_inv(const FrequencyContext& ctx, const SpectralField& v) {
  SpectralField out(v.weight());
  for (const auto& [mode, c] : v.coeffs())
    out.set(mode.m, mode.n, c / l_eigenvalue(ctx, mode.m, mode.n));
  out.set_tail(v.tail_budget() * l_inv_uniform_bound(ctx));
  return out;
}

double l_inv_column_bound(const FrequencyContext& ctx, int m, int n) {
  if (m < 0 || n < 0)
    throw std::domain_error("l_inv_column_bound: indices must be non-negative");
  const double k = static_cast<double>(ctx.k);
  const double spatial = 2.0 * k * (2.0 * n + 1.0);
  const double temporal = (2.0 * k + 1.0) * (2.0 * m + 1.0);
  const double mx = spatial > temporal ? spatial : temporal;
  return 4.0 * k * k / (2.0 * mx - 1.0);
}

double l_inv_column_bound_signed(const FrequencyContext& ctx, int mu, int nu) {
  const double k = static_cast<double>(ctx.k);
  const double am = std::abs(2.0 * mu + 1.0);
  const double an = std::abs(2.0 * nu + 1.0);
  const double mx = am > an ? am : an;
  return 4.0 * k * k / (4.0 * k * mx - 1.0);
}

double l_inv_uniform_bound(const FrequencyContext& ctx) {
  const double k = static_cast<double>(ctx.k);
  return 4.0 * k * k / (4.0 * k - 1.0);
}

OperatorAConstants build_A(const ApproxCoefficients& coeffs) {
  const double den = 24.0 * coeffs.beta0() - 1.0;
  if (!(den > 0.0)) throw std::runtime_error("build_A: 24 beta0 - 1 must be positive");
  OperatorAConstants a;
  a.a00 = -1.0 / den;
  a.a01 = 24.0 * coeffs.beta1() / den;
  if (!(std::abs(a.a00) < 10.0 / 17.0))
    throw std::runtime_error("build_A: a00 outside certified enclosure");
  if (!(std::abs(a.a01) < 54.0 / 85.0))
    throw std::runtime_error("build_A: a01 outside certified enclosure");
  return a;
}

SpectralField apply_A(const OperatorAConstants& a, const SpectralField& v) {
  SpectralField out = v;
  const double c00 = v.coeff(0, 0);
  const double c01 = v.coeff(0, 1);
  const double c10 = v.coeff(1, 0);
  out.set(0, 0, a.a00 * c00 + a.a01 * (c01 + c10));
  return out;
}

SpectralField apply_A_inverse(const OperatorAConstants& a, const SpectralField& v) {
  SpectralField out = v;
  const double c00 = v.coeff(0, 0);
  const double c01 = v.coeff(0, 1);
  const double c10 = v.coeff(1, 0);
  out.set(0, 0, (c00 - a.a01 * (c01 + c10)) / a.a00);
  return out;
}

SpectralField apply_lambda(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                           const SpectralField& h) {
  const SpectralField u = build_uk(ctx, coeffs, h.weight());
  return triple_product(u, u, h);
}

SpectralField apply_lambda_ctable(const FrequencyContext& ctx,
                                  const ApproxCoefficients& coeffs,
                                  const SpectralField& h, int lattice_cutoff) {
  if (lattice_cutoff < 1)
    throw std::invalid_argument("apply_lambda_ctable: lattice cutoff must be >= 1");
  const int L = lattice_cutoff;

  // Dense shift table; c depends only on |mu|,|nu| so one quadrant suffices.
  std::vector<double> table((L + 1) * (L + 1));
  for (int mu = 0; mu <= L; ++mu)
    for (int nu = 0; nu <= L; ++nu)
      table[static_cast<std::size_t>(mu) * (L + 1) + nu] = c_coeff(mu, nu, ctx, coeffs);

  SpectralField out(h.weight());
  const SpectralField u = build_uk(ctx, coeffs, h.weight());
  const double norm_u = norm(u);
  const double drop = c_tail_closed_form(L, ctx, coeffs, h.weight());
  out.set_tail(norm_u * norm_u * h.tail_budget() + drop * stored_norm(h));

  for (const auto& [mode, c] : h.coeffs()) {
    for (int mu = -L; mu <= L; ++mu) {
      const int amu = mu < 0 ? -mu : mu;
      const double* row = table.data() + static_cast<std::size_t>(amu) * (L + 1);
      for (int nu = -L; nu <= L; ++nu) {
        const double cc = row[nu < 0 ? -nu : nu];
        if (cc != 0.0) out.accumulate(mode.m + mu, mode.n + nu, cc * c);
      }
    }
  }
  return out;
}

void c_tail_alphas(double q, const WeightConfig& weight, double* alpha0, double* alpha1,
                   double* alpha2) {
  const double r4q = weight.power(4) * q;
  const double qq = q * q;
  *alpha0 = (1.0 + 2.0 * q - qq) + (1.0 - 2.0 * q - qq) * r4q;
  *alpha1 = 2.0 * (1.0 + q - qq) - 2.0 * (1.0 + 2.0 * q - qq) * r4q + 2.0 * q * r4q * r4q;
  *alpha2 = (1.0 - qq) * (1.0 - r4q) * (1.0 - r4q);
}

double c_tail_closed_form(int l, const FrequencyContext& ctx,
                          const ApproxCoefficients& coeffs, const WeightConfig& weight) {
  if (l < 1) throw std::invalid_argument("c_tail_closed_form: l must be >= 1");
  const double q = coeffs.q();
  const double r4q = weight.power(4) * q;
  double a0, a1, a2;
  c_tail_alphas(q, weight, &a0, &a1, &a2);
  const double ld = static_cast<double>(l);
  const double poly = a2 * ld * ld + a1 * ld + a0;
  const double onem = 1.0 - r4q;
  return 64.0 * std::pow(r4q, l + 1) * poly /
         (static_cast<double>(ctx.k) * (1.0 - q * q) * onem * onem * onem);
}

SpectralField residual_N(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                         const OperatorAConstants& a, const SpectralField& h) {
  const SpectralField u = build_uk(ctx, coeffs, h.weight());
  const SpectralField ah = apply_A(a, h);
  const SpectralField y = linear_combine(1.0, u, 1.0, ah);
  const SpectralField cube = triple_product(y, y, y);
  const SpectralField linv = apply_L_inv(ctx, cube);
  const SpectralField head = linear_combine(-1.0, linv, -1.0, u);
  const SpectralField rest = linear_combine(1.0, h, -1.0, ah);
  return linear_combine(1.0, head, 1.0, rest);
}

SpectralField apply_H(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                      const OperatorAConstants& a, const SpectralField& h) {
  const SpectralField ah = apply_A(a, h);
  const SpectralField lam = apply_lambda(ctx, coeffs, ah);
  const SpectralField linv = apply_L_inv(ctx, lam);
  const SpectralField rest = linear_combine(1.0, h, -1.0, ah);
  return linear_combine(-3.0, linv, 1.0, rest);
}

}  // namespace specwave
