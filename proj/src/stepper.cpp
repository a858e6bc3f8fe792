#include "gburgers/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gburgers/errors.hpp"

namespace gburgers {

double ipow(double w, int p) {
    double acc = 1.0;
    for (int i = 0; i < p; ++i) acc *= w;
    return acc;
}

LinearSystem assemble_system(const SolutionState& state, const ProblemSpec& spec,
                             const HaarBasis& basis, double dt, double t_next) {
    const std::size_t n = basis.n;
    if (state.w.size() != n || state.wx.size() != n || state.wxx.size() != n) {
        throw ConfigError("state vectors do not match the basis size");
    }
    const double L = spec.length();
    const double adv = dt / (2.0 * L);
    const double dif = spec.nu * dt / (2.0 * L * L);
    const double bc1 = spec.f1(t_next);
    const double bc2 = spec.f2(t_next);
    const double span = bc2 - bc1;

    LinearSystem sys;
    sys.A = Matrix(n, n);
    sys.rhs.resize(n);

    for (std::size_t k = 0; k < n; ++k) {
        const double w = state.w[k];
        const double wx = state.wx[k];
        const double wxx = state.wxx[k];
        if (!std::isfinite(w) || !std::isfinite(wx) || !std::isfinite(wxx)) {
            throw DivergenceError("non-finite state at t = " + std::to_string(state.t));
        }
        const double w_mu = ipow(w, spec.mu);
        const double w_delta = ipow(w, spec.delta);
        // Coefficient of w_{j+1} in the linearized equation. Terms with an
        // explicit zero exponent factor are dropped before forming w^{p-1}.
        const double g = (spec.delta == 0 ? 0.0
                                          : dif * spec.delta * ipow(w, spec.delta - 1) * wxx) -
                         (spec.mu == 0 ? 0.0 : adv * spec.mu * ipow(w, spec.mu - 1) * wx) - 1.0;
        const double xk = basis.x[k];

        for (std::size_t c = 0; c < n; ++c) {
            sys.A(k, c) = dif * w_delta * basis.H(k, c) -
                          adv * w_mu * (basis.P1(k, c) - basis.p2_one[c]) +
                          g * (basis.P2(k, c) - xk * basis.p2_one[c]);
        }
        sys.rhs[k] = -w + adv * (1.0 - spec.mu) * w_mu * wx -
                     dif * (1.0 - spec.delta) * w_delta * wxx + adv * w_mu * span -
                     g * (xk * span + bc1);
        if (!std::isfinite(g) || !std::isfinite(sys.rhs[k])) {
            // finite state, overflowing powers: still a divergence, not a
            // solver breakdown
            throw DivergenceError("non-finite system coefficients at t = " +
                                  std::to_string(state.t));
        }
    }
    return sys;
}

std::vector<double> solve_dense(const LinearSystem& sys) {
    const std::size_t n = sys.A.rows;
    if (sys.A.cols != n || sys.rhs.size() != n) {
        throw ConfigError("linear system is not square or rhs size mismatches");
    }
    Matrix a = sys.A;
    std::vector<double> x = sys.rhs;

    double anorm = 0.0;  // max absolute row sum
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) s += std::abs(a(r, c));
        anorm = std::max(anorm, s);
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        }
        if (std::abs(a(piv, col)) < 1e-13 * anorm) {
            throw SingularSystemError("singular collocation system (pivot " +
                                      std::to_string(a(piv, col)) + ")");
        }
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(col, c), a(piv, c));
            std::swap(x[col], x[piv]);
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) * inv;
            if (factor == 0.0) continue;
            for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
            x[r] -= factor * x[col];
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        double s = x[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
        x[r] = s / a(r, r);
    }

    double rhs_norm = 0.0;
    double res = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) s += sys.A(r, c) * x[c];
        res = std::max(res, std::abs(s - sys.rhs[r]));
        rhs_norm = std::max(rhs_norm, std::abs(sys.rhs[r]));
    }
    if (res > 1e-10 * (1.0 + rhs_norm)) {
        throw NumericalError("dense solve residual " + std::to_string(res) + " out of tolerance");
    }
    return x;
}

SolutionState advance(const SolutionState& state, const ProblemSpec& spec,
                      const HaarBasis& basis, double dt) {
    const double t_next = state.t + dt;
    const LinearSystem sys = assemble_system(state, spec, basis, dt, t_next);
    std::vector<double> coeffs;
    try {
        coeffs = solve_dense(sys);
    } catch (const SingularSystemError& e) {
        throw SingularSystemError(std::string(e.what()) + " at t = " + std::to_string(t_next));
    }

    const std::size_t n = basis.n;
    const double bc1 = spec.f1(t_next);
    const double bc2 = spec.f2(t_next);
    const double span = bc2 - bc1;

    SolutionState next;
    next.t = t_next;
    next.w.resize(n);
    next.wx.resize(n);
    next.wxx.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s_val = 0.0, s_p1 = 0.0, s_p2 = 0.0;
        const double xk = basis.x[k];
        for (std::size_t c = 0; c < n; ++c) {
            s_val += coeffs[c] * basis.H(k, c);
            s_p1 += coeffs[c] * (basis.P1(k, c) - basis.p2_one[c]);
            s_p2 += coeffs[c] * (basis.P2(k, c) - xk * basis.p2_one[c]);
        }
        next.wxx[k] = s_val;
        next.wx[k] = s_p1 + span;
        next.w[k] = s_p2 + xk * span + bc1;
    }
    next.coeffs = std::move(coeffs);
    return next;
}

int n_steps(const ProblemSpec& spec, const SolverConfig& config) {
    if (!(config.dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(config.T > spec.t0)) throw ConfigError("final time T must exceed the start time");
    const double horizon = config.T - spec.t0;
    const int n = static_cast<int>(std::llround(horizon / config.dt));
    if (n < 1 || std::abs(n * config.dt - horizon) > 1e-9) {
        throw ConfigError("T - t0 must be an integer multiple of dt");
    }
    return n;
}

RunResult run(const ProblemSpec& spec, const SolverConfig& config,
              const std::vector<double>& snapshot_times) {
    const int total = n_steps(spec, config);
    std::vector<double> snaps = snapshot_times;
    std::sort(snaps.begin(), snaps.end());
    for (double s : snaps) {
        if (s < spec.t0 - 1e-9 || s > config.T + 1e-9) {
            throw ConfigError("snapshot time " + std::to_string(s) + " outside [t0, T]");
        }
        const double steps = (s - spec.t0) / config.dt;
        if (std::abs(steps - std::llround(steps)) > 1e-9) {
            throw ConfigError("snapshot time " + std::to_string(s) +
                              " is not an integer multiple of dt");
        }
    }

    const HaarBasis basis = build_basis(config.J);
    const InitialSamples init = sample_initial(spec, basis);
    SolutionState state;
    state.t = spec.t0;
    state.w = init.w;
    state.wx = init.wx;
    state.wxx = init.wxx;

    RunResult result;
    std::size_t next_snap = 0;
    auto take_snapshots = [&](const SolutionState& st) {
        while (next_snap < snaps.size() && snaps[next_snap] <= st.t + 1e-9) {
            result.snapshots.push_back(st);
            ++next_snap;
        }
    };
    take_snapshots(state);

    for (int step = 1; step <= total; ++step) {
        state = advance(state, spec, basis, config.dt);
        state.t = spec.t0 + step * config.dt;  // keep level times drift-free
        for (double v : state.w) {
            if (!std::isfinite(v)) {
                throw DivergenceError("solution diverged at step " + std::to_string(step) +
                                      " (t = " + std::to_string(state.t) + ")");
            }
        }
        take_snapshots(state);
    }
    result.final_state = std::move(state);
    return result;
}

}  // namespace gburgers
