#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "specwave/fixed_point.hpp"
#include "specwave/qroot.hpp"

using namespace specwave;

namespace {

const ApproxCoefficients& coeffs() {
    static const ApproxCoefficients c = build_coeffs(solve_q(1e-15).q, kDefaultNf);
    return c;
}

const SolutionReport& certified_solution() {
    static const SolutionReport r = [] {
        FrequencyContext ctx(kTheoremMinK);
        return iterate(ctx, coeffs(), build_A(coeffs()), 1e-14, 200);
    }();
    return r;
}

}  // namespace

TEST_CASE("ball radius formula") {
    CHECK(contraction_ball_radius(FrequencyContext(79675)) ==
          doctest::Approx(1.0 / (500.0 * std::sqrt(79675.0))).epsilon(1e-15));
    CHECK(contraction_ball_radius(FrequencyContext(10000)) ==
          doctest::Approx(2e-5).epsilon(1e-12));
}

TEST_CASE("iteration input validation") {
    FrequencyContext ctx(kTheoremMinK);
    OperatorAConstants a = build_A(coeffs());
    CHECK_THROWS_AS(iterate(ctx, coeffs(), a, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(iterate(ctx, coeffs(), a, -1e-12, 10), std::invalid_argument);
    CHECK_THROWS_AS(iterate(ctx, coeffs(), a, 1e-14, 0), std::invalid_argument);
}

TEST_CASE("iteration aborts cleanly when the budget is too small") {
    FrequencyContext ctx(kTheoremMinK);
    OperatorAConstants a = build_A(coeffs());
    try {
        iterate(ctx, coeffs(), a, 1e-14, 1);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.increments().size() == 1);
        CHECK(e.increments()[0] > 1e-14);
    }
}

TEST_CASE("converged solution at the certified frequency") {
    const SolutionReport& r = certified_solution();
    const double sqrt_k = std::sqrt(static_cast<double>(kTheoremMinK));

    CHECK(r.k == kTheoremMinK);
    CHECK(r.theorem_range);
    CHECK(r.iterations <= 50);
    CHECK(r.increments.size() == static_cast<std::size_t>(r.iterations));
    CHECK(r.increments.back() <= 1e-14);
    CHECK(r.contraction_estimate < 1.0);
    CHECK(r.contraction_estimate <= 0.929);

    CHECK(norm(r.h) <= contraction_ball_radius(FrequencyContext(kTheoremMinK)));
    CHECK(r.distance_to_uk < (139.0 / 42500.0) / sqrt_k);
    CHECK(r.pde_residual_norm <= 1e-12);
    CHECK(nontriviality_check(FrequencyContext(kTheoremMinK), r));
}

TEST_CASE("increments decay geometrically after the start") {
    const SolutionReport& r = certified_solution();
    for (std::size_t j = 3; j < r.increments.size(); ++j) {
        CHECK(r.increments[j] <= r.increments[j - 1] * r.contraction_estimate * (1.0 + 1e-12));
    }
}

TEST_CASE("returned correction is a fixed point of the map") {
    const SolutionReport& r = certified_solution();
    FrequencyContext ctx(kTheoremMinK);
    SpectralField image = residual_N(ctx, coeffs(), build_A(coeffs()), r.h);
    SpectralField diff = linear_combine(1.0, image, -1.0, r.h);
    CHECK(stored_norm(diff) <= 2e-14);
}

TEST_CASE("assembled solution identity") {
    const SolutionReport& r = certified_solution();
    FrequencyContext ctx(kTheoremMinK);
    SpectralField expected = linear_combine(1.0, build_uk(ctx, coeffs()), 1.0,
                                            apply_A(build_A(coeffs()), r.h));
    SpectralField diff = linear_combine(1.0, r.u, -1.0, expected);
    CHECK(stored_norm(diff) <= 1e-15);
}

TEST_CASE("below the certified range the report is flagged empirical") {
    FrequencyContext ctx(1000);
    SolutionReport r = iterate(ctx, coeffs(), build_A(coeffs()), 1e-14, 200);
    CHECK_FALSE(r.theorem_range);
    CHECK(r.increments.back() <= 1e-14);
    CHECK(r.contraction_estimate < 1.0);
    CHECK(r.pde_residual_norm <= 1e-12);
    CHECK(nontriviality_check(ctx, r));
}

TEST_CASE("distance scaling across frequencies") {
    // inside the certified range the theorem cap applies; the smaller k is
    // outside it and only measured
    FrequencyContext big(100000);
    SolutionReport rb = iterate(big, coeffs(), build_A(coeffs()), 1e-14, 200);
    CHECK(rb.theorem_range);
    CHECK(rb.distance_to_uk * std::sqrt(100000.0) < 139.0 / 42500.0);

    FrequencyContext small(10000);
    SolutionReport rs = iterate(small, coeffs(), build_A(coeffs()), 1e-14, 200);
    CHECK_FALSE(rs.theorem_range);
    CHECK(rs.increments.back() <= 1e-14);
}

TEST_CASE("pde residual of raw inputs") {
    FrequencyContext ctx(100);
    SpectralField zero{WeightConfig{}};
    CHECK(verify_solution(ctx, zero) == 0.0);

    // the uncorrected approximation leaves a residual controlled by the
    // residue bound after smoothing: ||N(0)|| <= ||L^{-1}|| ||L u_k + u_k^3||
    SpectralField u = build_uk(ctx, coeffs());
    double raw = verify_solution(ctx, u);
    CHECK(raw > 0.0);
    SpectralField n0 = residual_N(ctx, coeffs(), build_A(coeffs()), zero);
    CHECK(norm(n0) <= l_inv_uniform_bound(ctx) * raw * (1.0 + 1e-12));

    const SolutionReport& r = certified_solution();
    CHECK(verify_solution(FrequencyContext(kTheoremMinK), r.u) <= 100.0 * 1e-14);
}

TEST_CASE("nontriviality rejects the zero field") {
    FrequencyContext ctx(kTheoremMinK);
    SolutionReport fake;
    fake.k = kTheoremMinK;
    fake.u = SpectralField{WeightConfig{}};
    CHECK_FALSE(nontriviality_check(ctx, fake));

    SolutionReport plain;
    plain.k = 100;
    plain.u = build_uk(FrequencyContext(100), coeffs());
    CHECK(nontriviality_check(FrequencyContext(100), plain));
}
