#pragma once

#include <vector>

#include "gburgers/haar_basis.hpp"
#include "gburgers/problems.hpp"

namespace gburgers {

struct SolverConfig {
    int J = 3;       // resolution level, basis size 2M = 2^{J+1}
    double dt = 0.01;
    double T = 1.0;  // final time; T - t0 must be an integer multiple of dt
};

/// Collocation-point samples of the solution and its mapped-coordinate
/// derivatives at one time level.
struct SolutionState {
    double t = 0.0;
    std::vector<double> w;
    std::vector<double> wx;
    std::vector<double> wxx;
    std::vector<double> coeffs;  // wavelet coefficients of the last step, empty before it
};

struct LinearSystem {
    Matrix A;
    std::vector<double> rhs;
};

/// Assemble the one-step collocation system for the next time level. Nonlinear
/// terms are linearized about the current state; advection and diffusion are
/// averaged over the two levels. Integer powers follow the convention that a
/// term carrying an explicit factor mu or delta equal to zero vanishes
/// identically, and w^0 = 1 everywhere.
LinearSystem assemble_system(const SolutionState& state, const ProblemSpec& spec,
                             const HaarBasis& basis, double dt, double t_next);

/// Direct elimination with row partial pivoting. Throws SingularSystemError on
/// pivot breakdown and NumericalError if the solution residual is out of
/// tolerance.
std::vector<double> solve_dense(const LinearSystem& sys);

/// One time step: assemble, solve, reconstruct w, wx, wxx at the collocation
/// points. The reconstruction interpolates the boundary values exactly.
SolutionState advance(const SolutionState& state, const ProblemSpec& spec,
                      const HaarBasis& basis, double dt);

/// w^p for nonnegative integer p by repeated multiplication (exact for
/// negative bases; w^0 = 1 including at w = 0).
double ipow(double w, int p);

struct RunResult {
    SolutionState final_state;
    std::vector<SolutionState> snapshots;  // at the requested times, ascending
};

/// March from t0 to T. Snapshot times must be integer multiples of dt from t0
/// (no interpolation in time); a snapshot is stored after the step that lands
/// on it, or from the initial state at t0.
RunResult run(const ProblemSpec& spec, const SolverConfig& config,
              const std::vector<double>& snapshot_times = {});

/// Step count N with N dt = T - t0; throws ConfigError if dt does not divide.
int n_steps(const ProblemSpec& spec, const SolverConfig& config);

}  // namespace gburgers
