#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "specwave/bounds.hpp"
#include "specwave/qroot.hpp"

using namespace specwave;

namespace {

const ApproxCoefficients& coeffs() {
    static const ApproxCoefficients c = build_coeffs(solve_q(1e-15).q, kDefaultNf);
    return c;
}

const FrequencyContext& ctx100() {
    static const FrequencyContext ctx(100);
    return ctx;
}

void check_report_invariants(const BoundReport& r) {
    CHECK(r.margin == doctest::Approx(r.bound - r.measured).epsilon(1e-15));
    CHECK(r.pass == (r.measured <= r.bound));
    CHECK_FALSE(r.name.empty());
}

}  // namespace

TEST_CASE("gap inequality sampling and boundary cases") {
    // |t^2 - s^2| >= 2 max{t,s} - 1: equality at (2,1), slack at (5,2)
    CHECK(std::abs(4.0 - 1.0) == 2.0 * 2.0 - 1.0);
    CHECK(std::abs(25.0 - 4.0) >= 2.0 * 5.0 - 1.0);

    BoundReport r = check_gap_inequality(10000);
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.bound == 0.0);
    CHECK(r.measured <= 0.0);  // negated minimal slack

    // deterministic for a fixed seed, different for another
    BoundReport again = check_gap_inequality(10000);
    CHECK(again.measured == r.measured);
    BoundReport other = check_gap_inequality(10000, 999);
    CHECK(other.pass);

    CHECK_THROWS_AS(check_gap_inequality(0), std::invalid_argument);
}

TEST_CASE("fraction lemma scan") {
    BoundReport r = check_fraction_lemma(200, 50);
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.bound == 1.0);
    // the (m,n,k) = (0,1,1) cell evaluates to 1/27
    CHECK(r.measured >= 1.0 / 27.0);
    CHECK(r.measured < 1.0);

    CHECK_THROWS_AS(check_fraction_lemma(1, 50), std::invalid_argument);
    CHECK_THROWS_AS(check_fraction_lemma(200, 1), std::invalid_argument);
}

TEST_CASE("approximation norm enclosure") {
    auto reports = check_uk_norm(ctx100(), coeffs());
    REQUIRE(reports.size() == 2);
    for (const BoundReport& r : reports) {
        check_report_invariants(r);
        CHECK(r.pass);
        CHECK(r.k == 100);
    }
    // lower bound is negated so one comparison direction serves both sides
    CHECK(reports[0].name == "uk_norm_lower");
    CHECK(reports[0].measured == doctest::Approx(-1.352185323309323).epsilon(1e-12));
    CHECK(reports[0].bound == -1.25);
    CHECK(reports[1].measured == doctest::Approx(1.352185323309323).epsilon(1e-12));
    CHECK(reports[1].bound == 1.5);
    CHECK(reports[1].truncation.tail_added > 0.0);
}

TEST_CASE("cube and residue norms include their tails") {
    BoundReport cube = check_uk3_norm(ctx100(), coeffs());
    check_report_invariants(cube);
    CHECK(cube.pass);
    CHECK(cube.measured == doctest::Approx(2.464832363655843).epsilon(1e-10));
    CHECK(cube.bound == doctest::Approx(2.0 * kSqrt2Lower).epsilon(1e-15));
    CHECK(cube.truncation.tail_added > 0.0);

    BoundReport res = check_residue_norm(ctx100(), coeffs());
    check_report_invariants(res);
    CHECK(res.pass);
    CHECK(res.measured == doctest::Approx(0.452742244558347).epsilon(1e-10));
    CHECK(res.bound == doctest::Approx(8.0 * kSqrt2Lower).epsilon(1e-15));
}

TEST_CASE("truncation refinement never flips a norm check") {
    // coarser coefficient cutoffs put more mass in the geometric tail
    // certificate, so measured values only shrink as the cutoff grows
    ApproxCoefficients coarse = build_coeffs(coeffs().q(), 8);
    ApproxCoefficients fine = build_coeffs(coeffs().q(), 32);

    double coarse_norm = check_uk_norm(ctx100(), coarse)[1].measured;
    double fine_norm = check_uk_norm(ctx100(), fine)[1].measured;
    CHECK(coarse_norm >= fine_norm);
    CHECK(check_uk_norm(ctx100(), coarse)[0].pass);

    double coarse_cube = check_uk3_norm(ctx100(), coarse).measured;
    double fine_cube = check_uk3_norm(ctx100(), fine).measured;
    CHECK(coarse_cube >= fine_cube);
    CHECK(coarse_cube <= check_uk3_norm(ctx100(), coarse).bound);
}

TEST_CASE("weighted cube coefficient block") {
    BoundReport r = check_b_sum(coeffs());
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.measured == doctest::Approx(0.0017020504676065655).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(19.0 / 10000.0).epsilon(1e-15));
    // the stated block is exact, nothing folded into a tail
    CHECK(r.truncation.tail_added == 0.0);
    CHECK(r.truncation.mode_cutoff == 40);
    CHECK_THROWS_AS(check_b_sum(coeffs(), 0), std::invalid_argument);
}

TEST_CASE("preconditioner column report") {
    BoundReport r = check_A_norm(coeffs());
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.measured == doctest::Approx(1.5025907298881214).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(139.0 / 85.0).epsilon(1e-15));
}

TEST_CASE("alpha coefficients against their caps") {
    TailBound t = tail_bound(1, ctx100(), coeffs());
    CHECK(t.l == 1);
    CHECK(t.alpha0 < 1045.0 / 1000.0);
    CHECK(t.alpha1 < 2003.0 / 1000.0);
    CHECK(t.alpha2 < 974.0 / 1000.0);
    CHECK(t.alpha0 > 1.0);
    CHECK(t.alpha1 > 1.9);
    CHECK(t.alpha2 > 0.9);
    CHECK(t.value > 0.0);

    BoundReport r = check_alpha_caps(ctx100(), coeffs());
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.measured == doctest::Approx(0.9978443149970435).epsilon(1e-12));
}

TEST_CASE("closed-form tail dominates the lattice sums") {
    BoundReport r = check_tail_lemma(ctx100(), coeffs(), 10, 400);
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.measured == doctest::Approx(0.7248466933032724).epsilon(1e-10));
    CHECK(r.bound == 1.0);

    // widening the lattice only moves the brute sum up toward the bound
    BoundReport narrow = check_tail_lemma(ctx100(), coeffs(), 10, 200);
    CHECK(narrow.pass);
    CHECK(narrow.measured <= r.measured * (1.0 + 1e-12));

    CHECK_THROWS_AS(check_tail_lemma(ctx100(), coeffs(), 0, 400), std::invalid_argument);
    CHECK_THROWS_AS(check_tail_lemma(ctx100(), coeffs(), 10, 10), std::invalid_argument);
}

TEST_CASE("off-block smoothing columns") {
    BoundReport r = check_J_bound(ctx100(), coeffs(), default_J_sample());
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.measured == doctest::Approx(0.009638660315452798).epsilon(1e-10));
    CHECK(r.bound == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(default_J_sample().size() == 10);

    // a shorter lattice leaves more mass to the closed-form remainder
    BoundReport coarse = check_J_bound(ctx100(), coeffs(), default_J_sample(), 200);
    CHECK(coarse.pass);
    CHECK(coarse.measured >= r.measured * (1.0 - 1e-12));
    CHECK(coarse.truncation.tail_added >= r.truncation.tail_added);

    // the proof is stated for k >= 100 and improves with k
    BoundReport far = check_J_bound(FrequencyContext(100000), coeffs(), {{0, 0}});
    CHECK(far.pass);
    CHECK(far.margin > r.margin);

    CHECK_THROWS_AS(check_J_bound(FrequencyContext(99), coeffs(), default_J_sample()),
                    std::domain_error);
    CHECK_THROWS_AS(check_J_bound(ctx100(), coeffs(), {}), std::invalid_argument);
}

TEST_CASE("linearized-map column norms against the proof table") {
    OperatorAConstants a = build_A(coeffs());

    double h11 = h_column_norm(ctx100(), coeffs(), a, 1, 1);
    CHECK(h11 < 0.74);
    double h02 = h_column_norm(ctx100(), coeffs(), a, 0, 2);
    CHECK(h02 < 0.24);
    double h00 = h_column_norm(ctx100(), coeffs(), a, 0, 0);
    CHECK(h00 < 0.15);

    // shrinking the shift lattice grows the certificate side
    CHECK(h_column_norm(ctx100(), coeffs(), a, 1, 1, 20) >= h11 * (1.0 - 1e-12));

    BoundReport table = check_H_column_table(ctx100(), coeffs(), a);
    check_report_invariants(table);
    CHECK(table.pass);
    CHECK(table.measured == doctest::Approx(0.718115259633978).epsilon(1e-10));

    CHECK_THROWS_AS(check_H_column_table(FrequencyContext(99), coeffs(), a),
                    std::domain_error);
}

TEST_CASE("global linearized-map norm") {
    OperatorAConstants a = build_A(coeffs());
    BoundReport r = check_H_norm(ctx100(), coeffs(), a, 24);
    check_report_invariants(r);
    CHECK(r.pass);
    CHECK(r.bound == doctest::Approx(0.88).epsilon(1e-15));
    CHECK(r.measured == doctest::Approx(0.7937410556484102).epsilon(1e-10));
    CHECK(r.truncation.note.find("m >= 4 or n >= 4") != std::string::npos);

    CHECK_THROWS_AS(check_H_norm(FrequencyContext(99), coeffs(), a), std::domain_error);
    CHECK_THROWS_AS(check_H_norm(ctx100(), coeffs(), a, 4), std::invalid_argument);
}

TEST_CASE("theorem certificate at the stated frequency") {
    OperatorAConstants a = build_A(coeffs());
    FrequencyContext ctx(79675);
    TheoremCertificate cert = theorem1_certificate(ctx, coeffs(), a);
    CHECK(cert.pass);
    CHECK(cert.in_stated_range);
    check_report_invariants(cert.contraction);
    check_report_invariants(cert.ball);
    CHECK(cert.contraction.pass);
    CHECK(cert.ball.pass);
    CHECK(cert.contraction.measured == doctest::Approx(0.8298229848139484).epsilon(1e-10));
    CHECK(cert.contraction.bound == doctest::Approx(0.929).epsilon(1e-15));
    CHECK(cert.delta_k == doctest::Approx(1.0 / (500.0 * std::sqrt(79675.0))).epsilon(1e-15));
    CHECK(cert.ball.bound == cert.delta_k);
    CHECK(cert.c_constant == cert.contraction.measured);
}

TEST_CASE("certificate outside the stated range") {
    OperatorAConstants a = build_A(coeffs());
    FrequencyContext low(10000);
    CHECK_THROWS_AS(theorem1_certificate(low, coeffs(), a), std::domain_error);

    TheoremCertificate cert =
        theorem1_certificate(low, coeffs(), a, kDefaultScanDepth, kDefaultLatticeCutoff, false);
    CHECK_FALSE(cert.in_stated_range);
    CHECK_FALSE(cert.pass);
    // the contraction constant still holds there; the ball mapping fails
    CHECK(cert.contraction.pass);
    CHECK_FALSE(cert.ball.pass);
    CHECK(cert.ball.truncation.note.find("outside") != std::string::npos);
}

TEST_CASE("exact rational re-checks") {
    auto reports = strict_rational_checks(79675);
    CHECK(reports.size() == 6);
    for (const BoundReport& r : reports) {
        check_report_invariants(r);
        CHECK(r.pass);
        CHECK(r.measured < 1.0);
    }
    CHECK_THROWS_AS(strict_rational_checks(0), std::invalid_argument);

    // the ball inequality genuinely fails below the threshold
    auto low = strict_rational_checks(10000);
    bool ball_failed = false;
    for (const BoundReport& r : low)
        if (r.name == "strict_ball_inequality") ball_failed = !r.pass;
    CHECK(ball_failed);
}

TEST_CASE("full suite aggregates deterministically") {
    auto reports = run_bound_suite(100, 79675, 16, true);
    CHECK(reports.size() == 21);
    for (const BoundReport& r : reports) {
        check_report_invariants(r);
        CHECK(r.pass);
    }
    for (std::size_t i = 0; i + 1 < reports.size(); ++i)
        CHECK(reports[i].name < reports[i + 1].name);
}
