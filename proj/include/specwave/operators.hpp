#pragma once

// Linear machinery around the wave operator
//
//   L_k P_{m,n} = [ -(2k+1)^2 (2m+1)^2 / (4k^2) + (2n+1)^2 ] P_{m,n},
//
// its inverse (well defined since 4k^2(2n+1)^2 - (2k+1)^2(2m+1)^2 is an even
// square minus an odd square, never zero), the multiplication operator
// Lambda_k h = u_k^2 h, the preconditioner A, the fixed-point map
//
//   N_k(h) = -L_k^{-1} (u_k + A h)^3 - u_k + (I - A) h,
//
// and its linear part H_k(h) = -3 L_k^{-1}(u_k^2 A h) + h - A h.

#include "specwave/approx.hpp"
#include "specwave/field.hpp"

namespace specwave {

// Exact eigenvalue of L_k at (m,n); the numerator is formed in 128-bit
// integer arithmetic, so the result is the correctly rounded double of an
// exact rational with denominator 4k^2.
double l_eigenvalue(const FrequencyContext& ctx, int m, int n);

// Multiplies every stored coefficient by its eigenvalue. Eigenvalue
// magnitudes grow with the mode indices, so no uniform factor covers an
// arbitrary tail; the tail budget is scaled by the largest |eigenvalue| over
// the stored support as a documented proxy (our tails sit many orders of
// magnitude below the norms they accompany, see the fixed-point reports).
SpectralField apply_L(const FrequencyContext& ctx, const SpectralField& v);

// Divides every stored coefficient by its eigenvalue; the tail budget is
// multiplied by the uniform operator bound 4k^2/(4k-1), which is valid for
// any tail content.
SpectralField apply_L_inv(const FrequencyContext& ctx, const SpectralField& v);

// Per-column bound 4k^2 / (2 max{2k(2n+1), (2k+1)(2m+1)} - 1) on the norm
// ratio ||L_k^{-1} P_{m,n}|| / ||P_{m,n}||; the uniform bound 4k^2/(4k-1) is
// this expression at (0,0) with the smaller branch.
double l_inv_column_bound(const FrequencyContext& ctx, int m, int n);

// Signed-index variant, valid before canonicalization:
// 4k^2 / (4k max{|2mu+1|, |2nu+1|} - 1).
double l_inv_column_bound_signed(const FrequencyContext& ctx, int mu, int nu);

// Uniform operator norm bound 4k^2/(4k-1).
double l_inv_uniform_bound(const FrequencyContext& ctx);

// The 3x3 block of A on span{P_{0,0}, P_{0,1}, P_{1,0}}; identity elsewhere.
// Row one is (a00, a01, a01); rows two and three are unit rows.
struct OperatorAConstants {
  double a00 = 0.0;  // -1/(24 beta0 - 1)
  double a01 = 0.0;  // 24 beta1/(24 beta0 - 1)
};

// Derives the constants from the beta values and checks them against the
// certified enclosures |a00| < 10/17, |a01| < 54/85.
OperatorAConstants build_A(const ApproxCoefficients& coeffs);

// New P_{0,0} coefficient = a00 c00 + a01 (c01 + c10); everything else is
// unchanged. Tails track high-mode truncation only, which A (identity off
// the three lowest modes) leaves untouched.
SpectralField apply_A(const OperatorAConstants& a, const SpectralField& v);

// Exact inverse of the 3x3 block: c00 = (c00' - a01 c01' - a01 c10')/a00.
SpectralField apply_A_inverse(const OperatorAConstants& a, const SpectralField& v);

// Lambda_k h = u_k^2 h by spectral convolution (two triple-product factors
// are u_k itself).
SpectralField apply_lambda(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                           const SpectralField& h);

// Same operator through the closed-form shift table: every stored mode of h
// scatters onto the shifts |mu|,|nu| <= lattice_cutoff with weights
// c_{mu,nu}. The dropped shifts are covered by the closed-form tail of
// c_tail_closed_form, and the incoming tail by ||u_k||^2. Agrees with
// apply_lambda to solver precision; the bounds verifier uses this path.
SpectralField apply_lambda_ctable(const FrequencyContext& ctx,
                                  const ApproxCoefficients& coeffs,
                                  const SpectralField& h, int lattice_cutoff);

// Closed-form bound on sum_{|mu|>l or |nu|>l} |c_{mu,nu}| rho^{4 max(|mu|,|nu|)}:
//   64 (q rho^4)^{l+1} (alpha2 l^2 + alpha1 l + alpha0) / (k (1-q^2)(1-q rho^4)^3).
double c_tail_closed_form(int l, const FrequencyContext& ctx,
                          const ApproxCoefficients& coeffs, const WeightConfig& weight);

// The alpha polynomial coefficients entering c_tail_closed_form.
void c_tail_alphas(double q, const WeightConfig& weight, double* alpha0, double* alpha1,
                   double* alpha2);

// N_k(h); the cube is one triple product of u_k + A h with itself.
SpectralField residual_N(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                         const OperatorAConstants& a, const SpectralField& h);

// H_k(h) = -3 L_k^{-1} Lambda_k(A h) + h - A h.
SpectralField apply_H(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                      const OperatorAConstants& a, const SpectralField& h);

inline constexpr int kDefaultLatticeCutoff = 40;

}  // namespace specwave
