#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "specwave/field.hpp"
#include "specwave/rng.hpp"
#include "specwave/triple_product.hpp"

using namespace specwave;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralField random_field(Rng& rng, int max_mode, int n_modes) {
    SpectralField v{WeightConfig{}};
    for (int i = 0; i < n_modes; ++i)
        v.accumulate(rng.uniform_int(0, max_mode), rng.uniform_int(0, max_mode),
                     rng.uniform(-1.0, 1.0));
    return v;
}

}  // namespace

TEST_CASE("canonicalize reflection rules") {
    CHECK(canonicalize(2, 3).mode == ModeIndex{2, 3});
    CHECK(canonicalize(2, 3).sign == 1);

    // P_{-m,n} = -P_{m-1,n} with m = 1
    CHECK(canonicalize(-1, 0).mode == ModeIndex{0, 0});
    CHECK(canonicalize(-1, 0).sign == -1);

    // both axes reflected: signs cancel
    CHECK(canonicalize(-2, -3).mode == ModeIndex{1, 2});
    CHECK(canonicalize(-2, -3).sign == 1);

    CHECK(canonicalize(0, -5).mode == ModeIndex{0, 4});
    CHECK(canonicalize(0, -5).sign == -1);
}

TEST_CASE("canonicalize is the identity on canonical input") {
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
            CanonicalMode c = canonicalize(m, n);
            CHECK(c.mode == ModeIndex{m, n});
            CHECK(c.sign == 1);
        }
    }
}

TEST_CASE("canonicalize matches the basis functions pointwise") {
    // sin((2mu+1)t) for negative mu must equal sign * sin((2m+1)t).
    Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        int mu = rng.uniform_int(-8, 8);
        int nu = rng.uniform_int(-8, 8);
        double tau = rng.uniform(0.0, 2.0 * kPi);
        double x = rng.uniform(0.0, kPi);
        CanonicalMode c = canonicalize(mu, nu);
        double raw = std::sin((2 * mu + 1) * tau) * std::sin((2 * nu + 1) * x);
        double folded = c.sign * std::sin((2 * c.mode.m + 1) * tau) *
                        std::sin((2 * c.mode.n + 1) * x);
        CHECK(raw == doctest::Approx(folded).epsilon(1e-12));
    }
}

TEST_CASE("WeightConfig validates and tabulates powers") {
    CHECK_THROWS_AS(WeightConfig(1, 1), std::domain_error);
    CHECK_THROWS_AS(WeightConfig(999, 1000), std::domain_error);
    CHECK_THROWS_AS(WeightConfig(-3, 2), std::domain_error);

    WeightConfig w;
    CHECK(w.num() == 1001);
    CHECK(w.den() == 1000);
    CHECK(w.rho() == doctest::Approx(1.001).epsilon(1e-15));
    CHECK(w.power(0) == 1.0);
    CHECK(w.power(2) == doctest::Approx(1.001 * 1.001).epsilon(1e-15));
    CHECK(w.weight(ModeIndex{0, 0}) == w.power(2));
    CHECK(w.weight(ModeIndex{2, 3}) == w.power(12));
}

TEST_CASE("norm of simple fields") {
    SpectralField v{WeightConfig{}};
    CHECK(norm(v) == 0.0);

    v.set(0, 0, 1.0);
    CHECK(norm(v) == doctest::Approx(1.002001).epsilon(1e-15));

    SpectralField w{WeightConfig{}};
    w.set(2, 3, -2.0);
    CHECK(norm(w) == doctest::Approx(2.0 * std::pow(1.001, 12)).epsilon(1e-15));

    w.add_tail(0.5);
    CHECK(norm(w) == doctest::Approx(stored_norm(w) + 0.5).epsilon(1e-15));
}

TEST_CASE("set and accumulate keep the sparse invariants") {
    SpectralField v{WeightConfig{}};
    CHECK_THROWS_AS(v.set(-1, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(v.add_tail(-1e-30), std::domain_error);

    v.set(1, 1, 2.0);
    v.set(1, 1, 0.0);  // exact zero pruned
    CHECK(v.empty());

    v.accumulate(1, 1, 3.0);
    v.accumulate(1, 1, -3.0);
    CHECK(v.empty());

    // signed accumulation folds through canonicalize
    v.accumulate(-1, 0, 1.0);
    CHECK(v.coeff(0, 0) == -1.0);
    v.accumulate(-2, -3, 4.0);
    CHECK(v.coeff(1, 2) == 4.0);
}

TEST_CASE("linear_combine examples") {
    SpectralField a{WeightConfig{}};
    a.set(0, 0, 2.0);
    SpectralField b{WeightConfig{}};
    b.set(0, 0, 2.0);
    CHECK(linear_combine(1.0, a, -1.0, b).empty());

    SpectralField c{WeightConfig{}};
    c.set(1, 1, 1.0);
    SpectralField d{WeightConfig{}};
    d.set(0, 0, 1.0);
    SpectralField s = linear_combine(2.0, d, 3.0, c);
    CHECK(s.coeff(0, 0) == 2.0);
    CHECK(s.coeff(1, 1) == 3.0);

    SpectralField e{WeightConfig{}};
    e.set(0, 1, 4.0);
    SpectralField empty{WeightConfig{}};
    CHECK(linear_combine(0.5, e, 0.0, empty).coeff(0, 1) == 2.0);

    a.set_tail(0.25);
    b.set_tail(0.5);
    CHECK(linear_combine(2.0, a, -1.0, b).tail_budget() == doctest::Approx(1.0).epsilon(1e-15));

    SpectralField other{WeightConfig{101, 100}};
    CHECK_THROWS_AS(linear_combine(1.0, a, 1.0, other), std::invalid_argument);
}

TEST_CASE("triangle inequality for the weighted norm") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        SpectralField u = random_field(rng, 8, 12);
        SpectralField v = random_field(rng, 8, 12);
        double a = rng.uniform(-2.0, 2.0);
        double b = rng.uniform(-2.0, 2.0);
        double lhs = norm(linear_combine(a, u, b, v));
        double rhs = std::abs(a) * norm(u) + std::abs(b) * norm(v);
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("evaluate hand values") {
    SpectralField v{WeightConfig{}};
    v.set(0, 0, 1.0);
    CHECK(evaluate(v, kPi / 2, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));

    SpectralField w{WeightConfig{}};
    w.set(1, 0, 2.0);
    CHECK(evaluate(w, kPi / 6, kPi / 2) == doctest::Approx(2.0).epsilon(1e-14));

    Rng rng;
    SpectralField r = random_field(rng, 8, 10);
    for (int i = 0; i < 20; ++i) {
        CHECK(std::abs(evaluate(r, 0.0, rng.uniform(0.0, kPi))) <= 1e-12);
    }
}

TEST_CASE("parity symmetries of the basis span") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        SpectralField v = random_field(rng, 8, 10);
        double tau = rng.uniform(0.0, 2.0 * kPi);
        double x = rng.uniform(0.0, kPi);
        double base = evaluate(v, tau, x);
        CHECK(std::abs(evaluate(v, kPi - tau, x) - base) <= 1e-12);
        CHECK(std::abs(evaluate(v, tau, kPi - x) - base) <= 1e-12);
        CHECK(std::abs(evaluate(v, -tau, x) + base) <= 1e-12);
        CHECK(std::abs(evaluate(v, tau, 0.0)) <= 1e-12);
        CHECK(std::abs(evaluate(v, tau, kPi)) <= 1e-12);
    }
}

TEST_CASE("project splits by subspace and routes the tail") {
    SpectralField v{WeightConfig{}};
    v.set(0, 0, 1.0);
    v.set(2, 2, 5.0);
    v.set_tail(0.125);

    SpectralField y1 = project(v, Subspace::Y1);
    CHECK(y1.coeff(0, 0) == 1.0);
    CHECK(y1.coeff(2, 2) == 0.0);
    CHECK(y1.tail_budget() == 0.0);  // tail lives in the complement

    SpectralField z1 = project(v, Subspace::Z1);
    CHECK(z1.coeff(2, 2) == 5.0);
    CHECK(z1.coeff(0, 0) == 0.0);
    CHECK(z1.tail_budget() == 0.125);

    SpectralField w{WeightConfig{}};
    w.set(3, 3, 1.0);
    w.set(4, 0, 1.0);
    SpectralField y2 = project(w, Subspace::Y2);
    CHECK(y2.coeff(3, 3) == 1.0);
    CHECK(y2.coeff(4, 0) == 0.0);

    // Y + Z reassembles the field
    SpectralField back = linear_combine(1.0, y1, 1.0, z1);
    CHECK(back.coeff(0, 0) == 1.0);
    CHECK(back.coeff(2, 2) == 5.0);
}

TEST_CASE("truncate_by_degree folds dropped mass into the tail") {
    Rng rng;
    SpectralField v = random_field(rng, 10, 30);
    double before = norm(v);
    SpectralField t = truncate_by_degree(v, 8);
    for (const auto& [mode, c] : t.coeffs()) CHECK(mode.m + mode.n + 1 <= 8);
    // exact dropped norm goes to the tail, so the total is preserved
    CHECK(norm(t) == doctest::Approx(before).epsilon(1e-13));
    CHECK(t.tail_budget() >= 0.0);
}

TEST_CASE("rescale index maps") {
    SpectralField v{WeightConfig{}};
    v.set(0, 0, 1.0);

    SpectralField same = rescale(v, 1, 1);
    CHECK(same.coeff(0, 0) == 1.0);
    CHECK(same.size() == 1);

    SpectralField t3 = rescale(v, 3, 1);
    CHECK(t3.coeff(1, 0) == 1.0);

    SpectralField x3 = rescale(v, 1, 3);
    CHECK(x3.coeff(0, 1) == 3.0);

    CHECK_THROWS_AS(rescale(v, 2, 1), std::domain_error);
    CHECK_THROWS_AS(rescale(v, 1, 4), std::domain_error);
}

TEST_CASE("rescale agrees with the pointwise definition") {
    // rescaled field evaluates to n * v(m tau, n x)
    Rng rng;
    SpectralField v = random_field(rng, 5, 8);
    for (auto [m, n] : {std::pair{3, 1}, std::pair{1, 3}, std::pair{3, 5}}) {
        SpectralField r = rescale(v, m, n);
        for (int i = 0; i < 25; ++i) {
            double tau = rng.uniform(0.0, 2.0 * kPi);
            double x = rng.uniform(0.0, kPi);
            CHECK(evaluate(r, tau, x) ==
                  doctest::Approx(n * evaluate(v, m * tau, n * x)).epsilon(1e-11));
        }
    }
}

TEST_CASE("focusing_transform swaps indices and rescales") {
    SpectralField v{WeightConfig{}};
    v.set(1, 2, 1.0);
    SpectralField f = focusing_transform(v, 1.0);
    CHECK(f.coeff(2, 1) == 1.0);

    SpectralField d{WeightConfig{}};
    d.set(0, 0, 2.0);
    CHECK(focusing_transform(d, 2.0).coeff(0, 0) == 1.0);

    SpectralField two{WeightConfig{}};
    two.set(0, 1, 1.0);
    two.set(1, 0, 3.0);
    SpectralField swapped = focusing_transform(two, 1.0);
    CHECK(swapped.coeff(1, 0) == 1.0);
    CHECK(swapped.coeff(0, 1) == 3.0);

    // the weight is swap invariant, so the norm scales by exactly 1/omega
    two.set_tail(0.5);
    CHECK(norm(focusing_transform(two, 4.0)) == doctest::Approx(norm(two) / 4.0).epsilon(1e-15));

    CHECK_THROWS_AS(focusing_transform(v, 0.0), std::domain_error);
    CHECK_THROWS_AS(focusing_transform(v, -1.0), std::domain_error);
}

TEST_CASE("triple product of the lowest mode") {
    // sin^3 t = (3 sin t - sin 3t)/4 in each variable
    SpectralField p{WeightConfig{}};
    p.set(0, 0, 1.0);
    SpectralField cube = triple_product(p, p, p);
    CHECK(cube.coeff(0, 0) == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
    CHECK(cube.coeff(0, 1) == doctest::Approx(-3.0 / 16.0).epsilon(1e-15));
    CHECK(cube.coeff(1, 0) == doctest::Approx(-3.0 / 16.0).epsilon(1e-15));
    CHECK(cube.coeff(1, 1) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(cube.size() == 4);
}

TEST_CASE("triple product annihilates on an empty factor") {
    Rng rng;
    SpectralField u = random_field(rng, 6, 8);
    SpectralField empty{WeightConfig{}};
    CHECK(triple_product(u, empty, u).empty());
    CHECK(norm(triple_product(empty, u, u)) == 0.0);
}

TEST_CASE("triple product pointwise oracle and submultiplicativity") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        SpectralField u = random_field(rng, 8, 6);
        SpectralField v = random_field(rng, 8, 6);
        SpectralField w = random_field(rng, 8, 6);
        SpectralField prod = triple_product(u, v, w);

        CHECK(norm(prod) <= norm(u) * norm(v) * norm(w) + 1e-12);

        for (int pt = 0; pt < 100; ++pt) {
            double tau = rng.uniform(0.0, 2.0 * kPi);
            double x = rng.uniform(0.0, kPi);
            double direct = evaluate(u, tau, x) * evaluate(v, tau, x) * evaluate(w, tau, x);
            CHECK(std::abs(evaluate(prod, tau, x) - direct) <= 1e-10);
        }
    }
}

TEST_CASE("production and reference triple products agree") {
    Rng rng;
    for (int trial = 0; trial < 50; ++trial) {
        SpectralField u = random_field(rng, 10, 8);
        SpectralField v = random_field(rng, 10, 8);
        SpectralField w = random_field(rng, 10, 8);
        SpectralField fast = triple_product(u, v, w);
        SpectralField ref = triple_product_reference(u, v, w);
        SpectralField diff = linear_combine(1.0, fast, -1.0, ref);
        CHECK(stored_norm(diff) <= 1e-13 * (1.0 + stored_norm(ref)));
        CHECK(fast.tail_budget() == doctest::Approx(ref.tail_budget()).epsilon(1e-13));
    }
}

TEST_CASE("triple product tail propagation uses the product rule") {
    SpectralField u{WeightConfig{}};
    u.set(0, 0, 1.0);
    u.set_tail(0.01);
    SpectralField v{WeightConfig{}};
    v.set(0, 1, 2.0);
    v.set_tail(0.02);
    SpectralField w{WeightConfig{}};
    w.set(1, 0, -1.0);

    SpectralField p = triple_product(u, v, w);
    double expected = u.tail_budget() * norm(v) * norm(w) +
                      norm(u) * v.tail_budget() * norm(w) +
                      norm(u) * norm(v) * w.tail_budget();
    CHECK(p.tail_budget() == doctest::Approx(expected).epsilon(1e-13));

    SpectralField other{WeightConfig{102, 100}};
    other.set(0, 0, 1.0);
    CHECK_THROWS_AS(triple_product(u, v, other), std::invalid_argument);
}
