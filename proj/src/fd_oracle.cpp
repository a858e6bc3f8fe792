#include "gburgers/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gburgers/errors.hpp"

namespace gburgers {

namespace {

// Local integer power; this module deliberately depends on nothing but the
// problem definition.
double int_pow(double w, int p) {
    double acc = 1.0;
    for (int i = 0; i < p; ++i) acc *= w;
    return acc;
}

// Thomas algorithm, overwriting rhs with the solution.
void solve_tridiagonal(const std::vector<double>& lower, std::vector<double>& diag,
                       const std::vector<double>& upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) throw NumericalError("tridiagonal pivot breakdown");
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) throw NumericalError("tridiagonal pivot breakdown");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

}  // namespace

FdGrid make_fd_grid(const ProblemSpec& spec, int n, double dt) {
    if (n < 3) throw ConfigError("fd grid needs at least 3 interior nodes");
    if (!(dt > 0.0)) throw ConfigError("fd time step must be positive");
    FdGrid grid;
    grid.n = n;
    grid.h = spec.length() / (n + 1);
    grid.dt = dt;
    grid.nodes.resize(n);
    for (int i = 0; i < n; ++i) grid.nodes[i] = spec.a + (i + 1) * grid.h;
    return grid;
}

std::vector<double> fd_solve(const ProblemSpec& spec, const FdGrid& grid, double T) {
    const double horizon = T - spec.t0;
    if (!(horizon > 0.0)) throw ConfigError("fd final time must exceed the start time");
    const long long steps = std::llround(horizon / grid.dt);
    if (steps < 1 || std::abs(steps * grid.dt - horizon) > 1e-9 * std::max(1.0, horizon)) {
        throw ConfigError("fd horizon must be an integer multiple of dt");
    }

    const int n = grid.n;
    const double h = grid.h;
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = spec.f(grid.nodes[i]);

    std::vector<double> lower(n), diag(n), upper(n), rhs(n);
    for (long long step = 0; step < steps; ++step) {
        const double t = spec.t0 + step * grid.dt;
        const double t_next = spec.t0 + (step + 1) * grid.dt;
        const double left_old = spec.f1(t), right_old = spec.f2(t);
        const double left_new = spec.f1(t_next), right_new = spec.f2(t_next);

        for (int i = 0; i < n; ++i) {
            const double adv = int_pow(w[i], spec.mu);
            const double dif = spec.nu * int_pow(w[i], spec.delta);
            const double ca = grid.dt * adv / (4.0 * h);
            const double cd = grid.dt * dif / (2.0 * h * h);
            const double wl = i == 0 ? left_old : w[i - 1];
            const double wr = i == n - 1 ? right_old : w[i + 1];
            const double gx = (wr - wl) / (2.0 * h);
            const double gxx = (wr - 2.0 * w[i] + wl) / (h * h);
            // One linearization sweep about the known level, as in the primary
            // scheme: the nonlinear products gain a reaction term on the
            // diagonal and (1 - mu)/(1 - delta) factors on the explicit side.
            const double react =
                (spec.mu == 0 ? 0.0
                              : 0.5 * grid.dt * spec.mu * int_pow(w[i], spec.mu - 1) * gx) -
                (spec.delta == 0 ? 0.0
                                 : 0.5 * grid.dt * spec.nu * spec.delta *
                                       int_pow(w[i], spec.delta - 1) * gxx);
            lower[i] = -ca - cd;
            diag[i] = 1.0 + react + 2.0 * cd;
            upper[i] = ca - cd;
            rhs[i] = w[i] - 0.5 * grid.dt * (1.0 - spec.mu) * adv * gx +
                     0.5 * grid.dt * (1.0 - spec.delta) * dif * gxx;
        }
        rhs[0] -= lower[0] * left_new;
        rhs[n - 1] -= upper[n - 1] * right_new;
        solve_tridiagonal(lower, diag, upper, rhs);
        w = rhs;
        for (double v : w) {
            if (!std::isfinite(v)) {
                throw DivergenceError("fd solve diverged at t = " + std::to_string(t_next));
            }
        }
    }
    return w;
}

namespace {

// Linear interpolation from boundary-augmented node values to a query point.
double interpolate(const ProblemSpec& spec, const FdGrid& grid, const std::vector<double>& w,
                   double T, double x) {
    const double h = grid.h;
    const int n = grid.n;
    double left = spec.f1(T), right = spec.f2(T);
    auto value_at = [&](int idx) {  // idx over 0..n+1 including boundaries
        if (idx <= 0) return left;
        if (idx >= n + 1) return right;
        return w[idx - 1];
    };
    int cell = static_cast<int>(std::floor((x - spec.a) / h));
    cell = std::clamp(cell, 0, n);
    const double x_lo = spec.a + cell * h;
    const double frac = (x - x_lo) / h;
    return value_at(cell) * (1.0 - frac) + value_at(cell + 1) * frac;
}

}  // namespace

FdReference fd_reference_at(const ProblemSpec& spec, const std::vector<double>& x_star,
                            double T, double accuracy_target) {
    if (!(accuracy_target > 0.0)) throw ConfigError("accuracy target must be positive");
    for (double x : x_star) {
        if (!(x >= spec.a && x <= spec.b)) throw ConfigError("query point outside the domain");
    }

    constexpr int kMaxInterior = 1 << 15;
    int n = 127;
    const double horizon = T - spec.t0;
    long long steps = std::max<long long>(
        64, static_cast<long long>(std::ceil(2.0 * horizon * (n + 1) / spec.length())));

    auto solve_at = [&](int nodes, long long nsteps) {
        const FdGrid grid = make_fd_grid(spec, nodes, horizon / nsteps);
        const std::vector<double> w = fd_solve(spec, grid, T);
        std::vector<double> at_queries(x_star.size());
        for (std::size_t q = 0; q < x_star.size(); ++q) {
            at_queries[q] = interpolate(spec, grid, w, T, x_star[q]);
        }
        return at_queries;
    };

    std::vector<double> prev = solve_at(n, steps);
    FdReference ref;
    while (true) {
        n = 2 * n + 1;
        steps *= 2;
        if (n > kMaxInterior) {
            throw NumericalError("fd reference cannot certify target " +
                                 std::to_string(accuracy_target) + " within the grid cap");
        }
        std::vector<double> cur = solve_at(n, steps);
        ++ref.refinements;
        double delta = 0.0;
        for (std::size_t q = 0; q < cur.size(); ++q) {
            delta = std::max(delta, std::abs(cur[q] - prev[q]));
        }
        if (delta <= accuracy_target) {
            ref.values = std::move(cur);
            ref.last_delta = delta;
            return ref;
        }
        prev = std::move(cur);
    }
}

}  // namespace gburgers
