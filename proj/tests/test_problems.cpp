#include "gburgers/problems.hpp"

#include <cmath>

#include <doctest.h>

#include "gburgers/errors.hpp"

using namespace gburgers;

namespace {

ProblemSpec tp(int id, double nu, double param) {
    ProblemParams params;
    if (id == 1) {
        params.c0 = param;
    } else if (id == 2 || id == 3) {
        params.sigma = param;
    }
    return make_test_problem(id, nu, params);
}

}  // namespace

TEST_CASE("built-in problem definitions") {
    const ProblemSpec p1 = tp(1, 0.01, 0.5);
    CHECK(p1.mu == 2);
    CHECK(p1.delta == 0);
    CHECK(p1.t0 == 1.0);
    CHECK(p1.b == 1.0);
    CHECK(p1.has_exact());

    const ProblemSpec p2 = tp(2, 1.0, 2.0);
    CHECK(p2.mu == 1);
    CHECK(p2.delta == 1);
    CHECK(p2.t0 == 0.0);

    const ProblemSpec p3 = tp(3, 0.01, 100.0);
    CHECK(p3.mu == 1);
    CHECK(p3.delta == 0);
    // direct evaluation of the closed form at t = 0, cos(pi/2) = 0
    CHECK(p3.f(0.5) == doctest::Approx(6.2831853071795865e-4).epsilon(1e-12));

    const ProblemSpec p4 = make_test_problem(4, 0.1);
    CHECK(p4.mu == 2);
    CHECK(p4.delta == 1);
    CHECK(p4.b == 5.0);
    CHECK(!p4.has_exact());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_test_problem(5, 0.1), ConfigError);
    CHECK_THROWS_AS(make_test_problem(1, -0.1, {.c0 = 0.5, .sigma = {}}), ConfigError);
    CHECK_THROWS_AS(make_test_problem(1, 0.1, {.c0 = 1.5, .sigma = {}}), ConfigError);
    CHECK_THROWS_AS(make_test_problem(1, 0.1, {}), ConfigError);
    CHECK_THROWS_AS(make_test_problem(1, 0.1, {.c0 = 0.5, .sigma = 2.0}), ConfigError);
    CHECK_THROWS_AS(make_test_problem(2, 1.0, {.c0 = {}, .sigma = -1.0}), ConfigError);
    CHECK_THROWS_AS(make_test_problem(3, 1.0, {.c0 = {}, .sigma = 1.0}), ConfigError);
    CHECK_THROWS_AS(make_test_problem(4, 1.0, {.c0 = 0.5, .sigma = {}}), ConfigError);
}

TEST_CASE("evaluate_exact basics and domain checks") {
    const ProblemSpec p2 = tp(2, 1.0, 2.0);
    for (double t : {0.0, 0.1, 1.0, 7.0}) {
        CHECK(evaluate_exact(p2, 0.0, t) == doctest::Approx(0.0).epsilon(1e-300));
    }
    CHECK_THROWS_AS(evaluate_exact(p2, -0.5, 1.0), ConfigError);
    CHECK_THROWS_AS(evaluate_exact(p2, 0.5, -1.0), ConfigError);

    const ProblemSpec p4 = make_test_problem(4, 0.1);
    CHECK_THROWS_AS(evaluate_exact(p4, 1.0, 0.1), ConfigError);

    const ProblemSpec p1 = tp(1, 0.01, 0.5);
    CHECK_THROWS_AS(evaluate_exact(p1, 0.5, 0.5), ConfigError);  // before t0 = 1
}

TEST_CASE("problem 1 stays finite for stiff exponents") {
    // long-double log-domain evaluation as the independent reference
    const double nu = 0.001, c0 = 0.5;
    const ProblemSpec p1 = tp(1, nu, c0);
    for (double x : {0.25, 0.5, 0.75, 1.0}) {
        for (double t : {1.0, 2.0, 4.0}) {
            const double got = evaluate_exact(p1, x, t);
            CHECK(std::isfinite(got));
            const long double lu =
                std::log((long double)c0) - 0.5L * std::log((long double)t) -
                (long double)(x * x) / (4.0L * (long double)nu * (long double)t);
            const long double lw = std::log((long double)x / (long double)t) + lu -
                                   std::log1p(std::exp(lu));
            const double want = static_cast<double>(std::exp(lw));
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }
    // frozen spot value, same oracle
    CHECK(evaluate_exact(p1, 1.0, 1.0) == doctest::Approx(1.3345951077706382e-109).epsilon(1e-12));
}

TEST_CASE("exact solutions reproduce the initial profile at t0") {
    const HaarBasis basis = build_basis(4);
    for (const ProblemSpec& spec : {tp(1, 0.01, 0.5), tp(2, 1.0, 2.0), tp(3, 0.01, 100.0)}) {
        for (double xk : basis.x) {
            const double xs = spec.a + spec.length() * xk;
            CHECK(std::abs(evaluate_exact(spec, xs, spec.t0) - spec.f(xs)) <= 1e-12);
        }
    }
}

TEST_CASE("problem 2 closed form satisfies the equation") {
    // transcription smoke test: w_t + w w_x - nu w w_xx = 0 under finite differences
    const ProblemSpec spec = tp(2, 1.0, 2.0);
    const double dt = 1e-5, dx = 1e-4;
    for (double x : {0.2, 0.5, 0.8}) {
        for (double t : {0.05, 0.1, 0.2}) {
            auto w = [&](double xx, double tt) { return evaluate_exact(spec, xx, tt); };
            const double wt = (w(x, t + dt) - w(x, t - dt)) / (2 * dt);
            const double wx = (w(x + dx, t) - w(x - dx, t)) / (2 * dx);
            const double wxx = (w(x + dx, t) - 2 * w(x, t) + w(x - dx, t)) / (dx * dx);
            const double v = w(x, t);
            CHECK(std::abs(wt + v * wx - spec.nu * v * wxx) <= 1e-6);
        }
    }
}

TEST_CASE("problem 3 exact solution scales as nu times a function of (x, nu t)") {
    const double sigma = 4.0;
    const ProblemSpec lo = tp(3, 0.005, sigma);
    const ProblemSpec hi = tp(3, 0.01, sigma);
    for (double x : {0.1, 0.4, 0.55, 0.9}) {
        for (double t : {0.5, 2.0, 10.0}) {
            const double a = evaluate_exact(lo, x, t) / lo.nu;
            const double b = evaluate_exact(hi, x, t / 2.0) / hi.nu;
            CHECK(std::abs(a - b) <= 1e-12);
        }
    }
}

TEST_CASE("problem 1 corner mismatch is tiny but nonzero") {
    CHECK(corner_mismatch(tp(1, 0.01, 0.5)) < 1e-10);
    // larger nu violates the homogeneous right boundary visibly; still only a warning
    const ProblemSpec warned = tp(1, 0.05, 0.5);
    CHECK(corner_mismatch(warned) > 1e-10);
    CHECK(warned.has_exact());
}

TEST_CASE("sample_initial maps derivatives with chain-rule factors") {
    const HaarBasis basis = build_basis(3);

    ProblemSpec zero;
    zero.mu = 1;
    zero.delta = 0;
    zero.nu = 1.0;
    zero.f = [](double) { return 0.0; };
    zero.f1 = [](double) { return 0.0; };
    zero.f2 = [](double) { return 0.0; };
    const InitialSamples z = sample_initial(zero, basis);
    for (std::size_t k = 0; k < basis.n; ++k) {
        CHECK(z.w[k] == 0.0);
        CHECK(z.wx[k] == 0.0);
        CHECK(z.wxx[k] == 0.0);
    }

    const ProblemSpec p4 = make_test_problem(4, 0.1);
    const InitialSamples s4 = sample_initial(p4, basis);
    const double pi = std::acos(-1.0);
    for (std::size_t k = 0; k < basis.n; ++k) {
        const double xs = 5.0 * basis.x[k];
        CHECK(s4.w[k] == doctest::Approx(std::sin(pi * xs)).epsilon(1e-14));
        CHECK(s4.wxx[k] == doctest::Approx(-25.0 * pi * pi * std::sin(pi * xs)).epsilon(1e-12));
    }
}

TEST_CASE("finite-difference fallback matches the analytic derivatives") {
    const HaarBasis basis = build_basis(3);
    const ProblemSpec p2 = tp(2, 1.0, 2.0);
    ProblemSpec fallback = p2;
    fallback.fx = nullptr;
    fallback.fxx = nullptr;

    const InitialSamples analytic = sample_initial(p2, basis);
    const InitialSamples fd = sample_initial(fallback, basis);
    for (std::size_t k = 0; k < basis.n; ++k) {
        CHECK(std::abs(fd.wx[k] - analytic.wx[k]) <= 1e-6 * (1.0 + std::abs(analytic.wx[k])));
        CHECK(std::abs(fd.wxx[k] - analytic.wxx[k]) <= 1e-6 * (1.0 + std::abs(analytic.wxx[k])));
    }
}

TEST_CASE("analytic fx/fxx agree with high-order differences") {
    const HaarBasis basis = build_basis(2);
    for (const ProblemSpec& spec :
         {tp(1, 0.01, 0.5), tp(2, 1.0, 2.0), tp(3, 0.01, 100.0), make_test_problem(4, 0.1)}) {
        const double h = 1e-3 * spec.length();
        for (double xk : basis.x) {
            const double x = spec.a + spec.length() * xk;
            const double d1 = (-spec.f(x + 2 * h) + 8 * spec.f(x + h) - 8 * spec.f(x - h) +
                               spec.f(x - 2 * h)) /
                              (12 * h);
            const double d2 = (-spec.f(x + 2 * h) + 16 * spec.f(x + h) - 30 * spec.f(x) +
                               16 * spec.f(x - h) - spec.f(x - 2 * h)) /
                              (12 * h * h);
            CHECK(spec.fx(x) == doctest::Approx(d1).epsilon(1e-6));
            CHECK(spec.fxx(x) == doctest::Approx(d2).epsilon(1e-5));
        }
    }
}
