#pragma once

#include <vector>

#include "gburgers/problems.hpp"

namespace gburgers {

/// Uniform interior grid for the finite-difference cross-check solver.
struct FdGrid {
    int n = 0;                  // interior node count, >= 3
    double h = 0.0;             // (b - a)/(n + 1)
    double dt = 0.0;
    std::vector<double> nodes;  // x*_i = a + i h, i = 1..n
};

FdGrid make_fd_grid(const ProblemSpec& spec, int n, double dt);

/// Crank-Nicolson march to time T with the nonlinear products linearized in
/// one sweep about the previous level (every nonlinear factor frozen there);
/// central differences in space, Dirichlet boundaries, tridiagonal solve per
/// step. Returns interior node values at T. Deliberately independent of the
/// wavelet solver.
std::vector<double> fd_solve(const ProblemSpec& spec, const FdGrid& grid, double T);

struct FdReference {
    std::vector<double> values;  // at the query points
    int refinements = 0;         // grid doublings actually performed
    double last_delta = 0.0;     // max change at the final comparison
};

/// Refine the grid (and step) until two successive solutions differ by at most
/// accuracy_target at the query points, then linearly interpolate to them.
/// Throws NumericalError if the cap n > 2^15 is reached without certifying.
FdReference fd_reference_at(const ProblemSpec& spec, const std::vector<double>& x_star,
                            double T, double accuracy_target);

}  // namespace gburgers
