#include "specwave/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "specwave/fixed_point.hpp"
#include "specwave/qroot.hpp"
#include "specwave/triple_product.hpp"

namespace specwave {

namespace {

BoundReport make_report(std::string name, std::optional<std::int64_t> k, double measured,
                        double bound, TruncationInfo truncation) {
  BoundReport r;
  r.name = std::move(name);
  r.k = k;
  r.measured = measured;
  r.bound = bound;
  r.margin = bound - measured;
  r.pass = measured <= bound;
  r.truncation = std::move(truncation);
  return r;
}

std::string format_value(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

SpectralField unit_mode(int m, int n) {
  SpectralField p{WeightConfig{}};
  p.set(m, n, 1.0);
  return p;
}

}  // namespace

BoundReport check_gap_inequality(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("check_gap_inequality: samples must be >= 1");
  Rng rng{seed};
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double t = 0.0;
    double s = 0.0;
    do {
      t = rng.uniform(1.0, 1000.0);
      s = rng.uniform(1.0, 1000.0);
    } while (std::abs(t - s) < 1.0);
    double slack = std::abs(t * t - s * s) - (2.0 * std::max(t, s) - 1.0);
    min_slack = std::min(min_slack, slack);
  }
  TruncationInfo tr;
  tr.note = "worst violation over " + std::to_string(samples) +
            " rejection samples from [1,1000]^2 with |t-s| >= 1; minimal slack " +
            format_value(min_slack);
  return make_report("gap_inequality", std::nullopt, -min_slack, 0.0, std::move(tr));
}

BoundReport check_fraction_lemma(std::int64_t k_max, int n_max) {
  if (k_max < 2 || n_max < 2)
    throw std::invalid_argument("check_fraction_lemma: k_max and n_max must be >= 2");
  bool exact_ok = true;
  double max_ratio = 0.0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const __int128 k2 = static_cast<__int128>(k) * k;
    for (int m = 0; m < n_max; ++m) {
      for (int n = m + 1; n <= n_max; ++n) {
        __int128 den = static_cast<__int128>(16) * (m - n) * (m + n + 1) * k2 +
                       static_cast<__int128>(2 * m + 1) * (2 * m + 1) * (4 * k + 1);
        if (den < 0) den = -den;
        if (k2 > den) exact_ok = false;
        double ratio = static_cast<double>(k2) / static_cast<double>(den);
        max_ratio = std::max(max_ratio, ratio);
      }
    }
  }
  TruncationInfo tr;
  tr.mode_cutoff = n_max;
  tr.note = "exhaustive integer scan k <= " + std::to_string(k_max) + ", m < n <= " +
            std::to_string(n_max) + "; comparison k^2 <= |denominator| done in integers";
  BoundReport r = make_report("fraction_lemma", std::nullopt, max_ratio, 1.0, std::move(tr));
  r.pass = r.pass && exact_ok;
  return r;
}

std::vector<BoundReport> check_uk_norm(const FrequencyContext& ctx,
                                       const ApproxCoefficients& coeffs) {
  SpectralField u = build_uk(ctx, coeffs);
  const double sqrt_k = std::sqrt(static_cast<double>(ctx.k));
  const double value = norm(u) * sqrt_k;
  TruncationInfo tr;
  tr.mode_cutoff = coeffs.cutoff();
  tr.tail_added = u.tail_budget() * sqrt_k;
  tr.note = "diagonal modes through the coefficient cutoff; geometric tail certificate included";
  std::vector<BoundReport> out;
  out.push_back(make_report("uk_norm_lower", ctx.k, -value, -5.0 / 4.0, tr));
  out.push_back(make_report("uk_norm_upper", ctx.k, value, 3.0 / 2.0, std::move(tr)));
  return out;
}

BoundReport check_uk3_norm(const FrequencyContext& ctx, const ApproxCoefficients& coeffs) {
  SpectralField u = build_uk(ctx, coeffs);
  SpectralField cube = triple_product(u, u, u);
  const double k = static_cast<double>(ctx.k);
  const double value = norm(cube) * k * std::sqrt(k);
  TruncationInfo tr;
  tr.mode_cutoff = coeffs.cutoff();
  tr.tail_added = cube.tail_budget() * k * std::sqrt(k);
  tr.note = "cube by spectral convolution; factor tails propagated through the product rule; "
            "bound is the lower enclosure of 2 sqrt(2)";
  return make_report("uk3_norm", ctx.k, value, 2.0 * kSqrt2Lower, std::move(tr));
}

BoundReport check_residue_norm(const FrequencyContext& ctx, const ApproxCoefficients& coeffs) {
  OperatorAConstants a = build_A(coeffs);
  SpectralField zero{WeightConfig{}};
  SpectralField res = residual_N(ctx, coeffs, a, zero);
  const double k = static_cast<double>(ctx.k);
  const double value = norm(res) * k * std::sqrt(k);
  TruncationInfo tr;
  tr.mode_cutoff = coeffs.cutoff();
  tr.tail_added = res.tail_budget() * k * std::sqrt(k);
  tr.note = "residual at the zero correction; bound is the lower enclosure of 8 sqrt(2)";
  return make_report("residue_norm", ctx.k, value, 8.0 * kSqrt2Lower, std::move(tr));
}

BoundReport check_b_sum(const ApproxCoefficients& coeffs, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("check_b_sum: cutoff must be >= 1");
  WeightConfig weight;
  double sum = 0.0;
  for (int m = 0; m <= cutoff; ++m)
    for (int n = 0; n <= cutoff; ++n) sum += weight.power(2 * (m + n + 1)) * std::abs(b_coeff(m, n, coeffs));
  TruncationInfo tr;
  tr.mode_cutoff = cutoff;
  tr.note = "weighted cube-coefficient block m,n <= " + std::to_string(cutoff) +
            ", the range the estimate is stated for";
  return make_report("b_sum", std::nullopt, sum, 19.0 / 10000.0, std::move(tr));
}

BoundReport check_A_norm(const ApproxCoefficients& coeffs) {
  OperatorAConstants a = build_A(coeffs);
  WeightConfig weight;
  double max_ratio = 0.0;
  for (ModeIndex column : {ModeIndex{0, 0}, ModeIndex{0, 1}, ModeIndex{1, 0}}) {
    SpectralField p = unit_mode(column.m, column.n);
    double ratio = norm(apply_A(a, p)) / weight.weight(column);
    max_ratio = std::max(max_ratio, ratio);
  }
  TruncationInfo tr;
  tr.note = "three low-mode columns measured; the operator is the identity elsewhere, ratio 1";
  return make_report("a_norm", std::nullopt, max_ratio, 139.0 / 85.0, std::move(tr));
}

TailBound tail_bound(int l, const FrequencyContext& ctx, const ApproxCoefficients& coeffs) {
  WeightConfig weight;
  TailBound t;
  t.l = l;
  c_tail_alphas(coeffs.q(), weight, &t.alpha0, &t.alpha1, &t.alpha2);
  t.value = c_tail_closed_form(l, ctx, coeffs, weight);
  return t;
}

BoundReport check_alpha_caps(const FrequencyContext& ctx, const ApproxCoefficients& coeffs) {
  TailBound t = tail_bound(1, ctx, coeffs);
  double ratio = std::max({t.alpha0 / (1045.0 / 1000.0), t.alpha1 / (2003.0 / 1000.0),
                           t.alpha2 / (974.0 / 1000.0)});
  TruncationInfo tr;
  tr.note = "alpha0 " + format_value(t.alpha0) + ", alpha1 " + format_value(t.alpha1) +
            ", alpha2 " + format_value(t.alpha2) + " against caps 1045/1000, 2003/1000, 974/1000";
  return make_report("alpha_caps", std::nullopt, ratio, 1.0, std::move(tr));
}

namespace {

// Weighted shift-table mass per square ring max{|mu|,|nu|} = r.
std::vector<double> ring_sums(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                              int cutoff) {
  WeightConfig weight;
  std::vector<double> ring(static_cast<std::size_t>(cutoff) + 1, 0.0);
  ring[0] = std::abs(c_coeff(0, 0, ctx, coeffs));
  for (int r = 1; r <= cutoff; ++r) {
    double s = 0.0;
    for (int nu = -r; nu <= r; ++nu)
      s += std::abs(c_coeff(r, nu, ctx, coeffs)) + std::abs(c_coeff(-r, nu, ctx, coeffs));
    for (int mu = -r + 1; mu <= r - 1; ++mu)
      s += std::abs(c_coeff(mu, r, ctx, coeffs)) + std::abs(c_coeff(mu, -r, ctx, coeffs));
    ring[static_cast<std::size_t>(r)] = s * weight.power(4 * r);
  }
  return ring;
}

}  // namespace

BoundReport check_tail_lemma(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                             int l_max, int cutoff) {
  if (l_max < 1) throw std::invalid_argument("check_tail_lemma: l_max must be >= 1");
  if (cutoff <= l_max) throw std::invalid_argument("check_tail_lemma: cutoff must exceed l_max");
  std::vector<double> ring = ring_sums(ctx, coeffs, cutoff);
  double max_ratio = 0.0;
  for (int l = 1; l <= l_max; ++l) {
    double brute = 0.0;
    for (int r = cutoff; r > l; --r) brute += ring[static_cast<std::size_t>(r)];
    double closed = c_tail_closed_form(l, ctx, coeffs, WeightConfig{});
    max_ratio = std::max(max_ratio, brute / closed);
  }
  TruncationInfo tr;
  tr.mode_cutoff = cutoff;
  tr.note = "lattice sums over max{|mu|,|nu|} <= " + std::to_string(cutoff) +
            " for l = 1.." + std::to_string(l_max) +
            "; shifts beyond the cutoff underflow double precision";
  return make_report("tail_lemma", ctx.k, max_ratio, 1.0, std::move(tr));
}

std::vector<ModeIndex> default_J_sample() {
  return {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 7}, {7, 5}, {9, 9}};
}

BoundReport check_J_bound(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                          const std::vector<ModeIndex>& modes, int cutoff) {
  if (ctx.k < 100)
    throw std::domain_error("check_J_bound: the estimate is stated for k >= 100");
  if (modes.empty()) throw std::invalid_argument("check_J_bound: empty mode list");
  if (cutoff < 2) throw std::invalid_argument("check_J_bound: cutoff must be >= 2");
  WeightConfig weight;
  const double tail = c_tail_closed_form(cutoff, ctx, coeffs, weight) * l_inv_uniform_bound(ctx);
  double max_ratio = 0.0;
  for (ModeIndex base : modes) {
    if (base.m < 0 || base.n < 0)
      throw std::invalid_argument("check_J_bound: modes must be canonical");
    double sum = 0.0;
    for (int mu = -cutoff; mu <= cutoff; ++mu) {
      for (int nu = -cutoff; nu <= cutoff; ++nu) {
        if (std::abs(mu) <= 1 && std::abs(nu) <= 1) continue;
        double c = c_coeff(mu, nu, ctx, coeffs);
        if (c == 0.0) continue;
        CanonicalMode target = canonicalize(base.m + mu, base.n + nu);
        sum += std::abs(c) * weight.weight(target.mode) /
               std::abs(l_eigenvalue(ctx, target.mode.m, target.mode.n));
      }
    }
    max_ratio = std::max(max_ratio, (sum + tail * weight.weight(base)) / weight.weight(base));
  }
  TruncationInfo tr;
  tr.mode_cutoff = cutoff;
  tr.tail_added = tail;
  tr.note = "per-shift column norms summed over the off-block lattice |mu|,|nu| <= " +
            std::to_string(cutoff) + "; remainder covered by the closed-form tail times the "
            "uniform inverse bound";
  return make_report("j_bound", ctx.k, max_ratio, 1.0 / 16.0, std::move(tr));
}

double h_column_norm(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                     const OperatorAConstants& a, int m, int n, int lattice_cutoff) {
  SpectralField p = unit_mode(m, n);
  SpectralField ap = apply_A(a, p);
  SpectralField smoothed = apply_L_inv(ctx, apply_lambda_ctable(ctx, coeffs, ap, lattice_cutoff));
  SpectralField column = linear_combine(-3.0, smoothed, 1.0, linear_combine(1.0, p, -1.0, ap));
  return norm(column) / p.weight().weight({m, n});
}

namespace {

// Closed-form estimate covering every column with m >= 4 or n >= 4: three
// grouped inverse-eigenvalue terms for the near-diagonal shifts plus the
// off-block tail, everything times the factor 3 of the linearization.
double h_uniform_outer(const FrequencyContext& ctx, const ApproxCoefficients& coeffs) {
  WeightConfig weight;
  const double q = coeffs.q();
  const double k = static_cast<double>(ctx.k);
  const double r4 = weight.power(4);
  const double geom = 1.0 - q * q;
  const double inner = (q + q * q / geom) * 128.0 * k / (28.0 * k - 1.0) +
                       (q + q / geom) * 128.0 * k / (36.0 * k - 1.0) +
                       (q + q * q / geom) * 128.0 * k / (44.0 * k - 1.0);
  const double off_block = c_tail_closed_form(1, ctx, coeffs, weight) * l_inv_uniform_bound(ctx);
  return 3.0 * inner * r4 + 3.0 * off_block;
}

}  // namespace

BoundReport check_H_norm(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                         const OperatorAConstants& a, int scan_depth, int lattice_cutoff) {
  if (ctx.k < 100)
    throw std::domain_error("check_H_norm: the estimate is stated for k >= 100");
  if (scan_depth < 8) throw std::invalid_argument("check_H_norm: scan depth must be >= 8");
  if (lattice_cutoff < 2)
    throw std::invalid_argument("check_H_norm: lattice cutoff must be >= 2");
  double scan_max = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : scan_max)
  for (int m = 0; m <= scan_depth; ++m)
    for (int n = 0; n <= scan_depth; ++n)
      scan_max = std::max(scan_max, h_column_norm(ctx, coeffs, a, m, n, lattice_cutoff));
  const double outer = h_uniform_outer(ctx, coeffs);
  TruncationInfo tr;
  tr.mode_cutoff = scan_depth;
  tr.tail_added = c_tail_closed_form(lattice_cutoff, ctx, coeffs, WeightConfig{}) *
                  l_inv_uniform_bound(ctx) * 3.0;
  tr.note = "columns m,n <= " + std::to_string(scan_depth) +
            " measured with shift lattice |mu|,|nu| <= " + std::to_string(lattice_cutoff) +
            " (scan max " + format_value(scan_max) +
            "); every column with m >= 4 or n >= 4 covered by the closed-form estimate " +
            format_value(outer);
  return make_report("h_norm", ctx.k, std::max(scan_max, outer), 88.0 / 100.0, std::move(tr));
}

BoundReport check_H_column_table(const FrequencyContext& ctx, const ApproxCoefficients& coeffs,
                                 const OperatorAConstants& a, int lattice_cutoff) {
  if (ctx.k < 100)
    throw std::domain_error("check_H_column_table: the estimate is stated for k >= 100");
  struct Entry {
    int m;
    int n;
    double cap;
  };
  static constexpr Entry kTable[] = {
      {0, 0, 0.15}, {0, 1, 0.30}, {0, 2, 0.24}, {0, 3, 0.19},
      {1, 0, 0.30}, {1, 1, 0.74}, {1, 2, 0.30}, {1, 3, 0.21},
      {2, 0, 0.24}, {2, 1, 0.30}, {2, 2, 0.30}, {2, 3, 0.24},
      {3, 0, 0.19}, {3, 1, 0.21}, {3, 2, 0.24}, {3, 3, 0.24},
  };
  double max_ratio = 0.0;
  for (const Entry& e : kTable) {
    double value = h_column_norm(ctx, coeffs, a, e.m, e.n, lattice_cutoff);
    max_ratio = std::max(max_ratio, value / e.cap);
  }
  TruncationInfo tr;
  tr.mode_cutoff = lattice_cutoff;
  tr.note = "sixteen low-mode columns against their individual caps; "
            "measured is the largest column-to-cap ratio";
  return make_report("h_column_table", ctx.k, max_ratio, 1.0, std::move(tr));
}

TheoremCertificate theorem1_certificate(const FrequencyContext& ctx,
                                        const ApproxCoefficients& coeffs,
                                        const OperatorAConstants& a, int scan_depth,
                                        int lattice_cutoff, bool enforce_range) {
  const bool in_range = ctx.k >= kTheoremMinK;
  if (!in_range && enforce_range)
    throw std::domain_error("theorem1_certificate: stated for k >= " +
                            std::to_string(kTheoremMinK));
  BoundReport h = check_H_norm(ctx, coeffs, a, scan_depth, lattice_cutoff);
  const double norm_u = norm(build_uk(ctx, coeffs));
  const double norm_a = check_A_norm(coeffs).measured;
  const double l_inv = l_inv_uniform_bound(ctx);
  const double delta = 1.0 / (500.0 * std::sqrt(static_cast<double>(ctx.k)));
  const double c = h.measured + 6.0 * l_inv * norm_u * norm_a * norm_a * delta +
                   3.0 * l_inv * norm_a * norm_a * norm_a * delta * delta;

  TheoremCertificate cert;
  cert.c_constant = c;
  cert.delta_k = delta;
  cert.in_stated_range = in_range;

  TruncationInfo tr_c;
  tr_c.mode_cutoff = scan_depth;
  tr_c.tail_added = h.truncation.tail_added;
  tr_c.note = "linear part " + format_value(h.measured) +
              " from the column scan plus closed-form cover; quadratic and cubic terms use the "
              "measured approximation and preconditioner norms with the uniform inverse bound";
  if (!in_range) tr_c.note += "; outside theorem range";
  cert.contraction =
      make_report("theorem1_contraction", ctx.k, c, 929.0 / 1000.0, std::move(tr_c));

  const double kd = static_cast<double>(ctx.k);
  const double lhs = (929.0 / 1000.0) * delta + 8.0 * kSqrt2Upper / (kd * std::sqrt(kd));
  TruncationInfo tr_b;
  tr_b.note = "closed-form ball mapping check; sqrt(2) taken at the upper enclosure";
  if (!in_range) tr_b.note += "; outside theorem range";
  cert.ball = make_report("theorem1_ball", ctx.k, lhs, delta, std::move(tr_b));

  cert.pass = cert.contraction.pass && cert.ball.pass;
  return cert;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigRat rat_pow4(const BigRat& x) {
  BigRat x2 = x * x;
  return x2 * x2;
}

double rat_to_double(const BigRat& x) { return static_cast<double>(x); }

BigRat alpha0_rat(const BigRat& q, const BigRat& r4) {
  return (1 + 2 * q - q * q) + (1 - 2 * q - q * q) * r4 * q;
}

BigRat alpha1_rat(const BigRat& q, const BigRat& r4) {
  BigRat p = r4 * q;
  return 2 * (1 + q - q * q) - 2 * (1 + 2 * q - q * q) * p + 2 * q * p * p;
}

BigRat alpha2_rat(const BigRat& q, const BigRat& r4) {
  BigRat p = 1 - r4 * q;
  return (1 - q * q) * p * p;
}

}  // namespace

std::vector<BoundReport> strict_rational_checks(std::int64_t cert_k) {
  if (cert_k < 1) throw std::invalid_argument("strict_rational_checks: cert_k must be >= 1");
  std::vector<BoundReport> out;
  const BigRat r4 = rat_pow4(BigRat(1001, 1000));
  const BigRat qlo(13, 1000);
  const BigRat qhi(15, 1000);

  // The alphas are monotone across the root bracket (alpha0 increasing,
  // alpha1 and alpha2 decreasing), so endpoint checks cover the interval.
  {
    const BigRat caps[3] = {BigRat(1045, 1000), BigRat(2003, 1000), BigRat(974, 1000)};
    bool ok = true;
    double worst = 0.0;
    for (const BigRat& q : {qlo, qhi}) {
      const BigRat values[3] = {alpha0_rat(q, r4), alpha1_rat(q, r4), alpha2_rat(q, r4)};
      for (int i = 0; i < 3; ++i) {
        ok = ok && values[i] < caps[i];
        worst = std::max(worst, rat_to_double(values[i] / caps[i]));
      }
    }
    TruncationInfo tr;
    tr.note = "exact rational evaluation at both root-bracket endpoints";
    BoundReport r = make_report("strict_alpha_caps", std::nullopt, worst, 1.0, std::move(tr));
    r.pass = r.pass && ok;
    out.push_back(std::move(r));
  }

  // Each enclosure form is increasing in q: lower bounds checked at the low
  // endpoint, upper bounds at the high one.
  {
    auto beta0_lower = [](const BigRat& q) {
      return (4 * q / (1 - q * q) + 2 * q * q / (1 - q * q) + 5 * q) / ((1 + q) * (1 + q));
    };
    auto beta0_upper = [](const BigRat& q) {
      return 4 * q / (1 - q * q) + 2 * q * q / (1 - q * q) + 5 * q / ((1 + q) * (1 + q));
    };
    auto beta1_lower = [](const BigRat& q) {
      return (2 * q * q / (1 - q * q) + 3 * q) / ((1 + q) * (1 + q));
    };
    auto beta1_upper = [](const BigRat& q) {
      return 2 * q * q / (1 - q * q) + 3 * q / ((1 + q) * (1 + q));
    };
    const BigRat b0l = beta0_lower(qlo), b0u = beta0_upper(qhi);
    const BigRat b1l = beta1_lower(qlo), b1u = beta1_upper(qhi);
    bool ok = b0l > BigRat(113, 1000) && b0u < BigRat(135, 1000) && b1l > BigRat(38, 1000) &&
              b1u < BigRat(45, 1000);
    double worst = std::max({rat_to_double(BigRat(113, 1000) / b0l),
                             rat_to_double(b0u / BigRat(135, 1000)),
                             rat_to_double(BigRat(38, 1000) / b1l),
                             rat_to_double(b1u / BigRat(45, 1000))});
    TruncationInfo tr;
    tr.note = "exact rational beta enclosures at the root-bracket endpoints";
    BoundReport r = make_report("strict_beta_intervals", std::nullopt, worst, 1.0, std::move(tr));
    r.pass = r.pass && ok;
    out.push_back(std::move(r));
  }

  // Worst-case preconditioner entries from the beta interval caps:
  // 1/(24 beta0 - 1) at beta0 = 113/1000 and 24 beta1/(24 beta0 - 1) at
  // beta1 = 45/1000.
  {
    const BigRat a00 = BigRat(1) / (24 * BigRat(113, 1000) - 1);
    const BigRat a01 = 24 * BigRat(45, 1000) / (24 * BigRat(113, 1000) - 1);
    bool ok = a00 < BigRat(10, 17) && a01 < BigRat(54, 85);
    double worst = std::max(rat_to_double(a00 / BigRat(10, 17)),
                            rat_to_double(a01 / BigRat(54, 85)));
    TruncationInfo tr;
    tr.note = "entry caps from the interval-worst beta values, exact rational comparison";
    BoundReport r =
        make_report("strict_preconditioner_entries", std::nullopt, worst, 1.0, std::move(tr));
    r.pass = r.pass && ok;
    out.push_back(std::move(r));
  }

  // Ball-mapping inequality in integers: 32 * 10^12 < 5041 k^2.
  {
    const BigInt lhs = BigInt(32) * boost::multiprecision::pow(BigInt(10), 12);
    const BigInt rhs = BigInt(5041) * cert_k * cert_k;
    bool ok = lhs < rhs;
    TruncationInfo tr;
    tr.note = "integer form of the ball inequality at k = " + std::to_string(cert_k);
    BoundReport r = make_report("strict_ball_inequality", cert_k,
                                rat_to_double(BigRat(lhs) / BigRat(rhs)), 1.0, std::move(tr));
    r.pass = r.pass && ok;
    out.push_back(std::move(r));
  }

  // 1.41421356 < sqrt(2) < 1.41421357 via squared integer comparisons.
  {
    const BigInt lo(141421356), hi(141421357);
    const BigInt two = BigInt(2) * boost::multiprecision::pow(BigInt(10), 16);
    bool ok = lo * lo < two && hi * hi > two;
    double worst = std::max(rat_to_double(BigRat(lo * lo) / BigRat(two)),
                            rat_to_double(BigRat(two) / BigRat(hi * hi)));
    TruncationInfo tr;
    tr.note = "squared rational enclosure of sqrt(2)";
    BoundReport r = make_report("strict_sqrt2_bracket", std::nullopt, worst, 1.0, std::move(tr));
    r.pass = r.pass && ok;
    out.push_back(std::move(r));
  }

  // Fraction scan redone in big integers.
  {
    bool ok = true;
    double max_ratio = 0.0;
    for (std::int64_t k = 1; k <= 200; ++k) {
      const BigInt k2 = BigInt(k) * k;
      for (int m = 0; m < 50; ++m) {
        for (int n = m + 1; n <= 50; ++n) {
          BigInt den = BigInt(16) * (m - n) * (m + n + 1) * k2 +
                       BigInt(2 * m + 1) * (2 * m + 1) * (4 * k + 1);
          if (den < 0) den = -den;
          ok = ok && k2 <= den;
          max_ratio = std::max(max_ratio, rat_to_double(BigRat(k2) / BigRat(den)));
        }
      }
    }
    TruncationInfo tr;
    tr.mode_cutoff = 50;
    tr.note = "big-integer rerun of the fraction scan, k <= 200, m < n <= 50";
    BoundReport r =
        make_report("strict_fraction_lemma", std::nullopt, max_ratio, 1.0, std::move(tr));
    r.pass = r.pass && ok;
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<BoundReport> run_bound_suite(std::int64_t lemma_k, std::int64_t cert_k,
                                         int scan_depth, bool strict, std::uint64_t seed) {
  QRoot root = solve_q(1e-15);
  ApproxCoefficients coeffs = build_coeffs(root.q, kDefaultNf);
  FrequencyContext ctx{lemma_k};
  FrequencyContext cert_ctx{cert_k};
  OperatorAConstants a = build_A(coeffs);

  std::vector<BoundReport> out;
  out.push_back(check_gap_inequality(10000, seed));
  out.push_back(check_fraction_lemma(200, 50));
  for (BoundReport& r : check_uk_norm(ctx, coeffs)) out.push_back(std::move(r));
  out.push_back(check_uk3_norm(ctx, coeffs));
  out.push_back(check_residue_norm(ctx, coeffs));
  out.push_back(check_b_sum(coeffs));
  out.push_back(check_A_norm(coeffs));
  out.push_back(check_alpha_caps(ctx, coeffs));
  out.push_back(check_tail_lemma(ctx, coeffs, 10, kDefaultTailCutoff));
  out.push_back(check_J_bound(ctx, coeffs, default_J_sample()));
  out.push_back(check_H_norm(ctx, coeffs, a, scan_depth));
  out.push_back(check_H_column_table(ctx, coeffs, a));
  TheoremCertificate cert =
      theorem1_certificate(cert_ctx, coeffs, a, scan_depth, kDefaultLatticeCutoff, false);
  out.push_back(std::move(cert.contraction));
  out.push_back(std::move(cert.ball));
  if (strict) {
    for (BoundReport& r : strict_rational_checks(cert_k)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const BoundReport& x, const BoundReport& y) { return x.name < y.name; });
  return out;
}

}  // namespace specwave
