#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gburgers/problems.hpp"

namespace gburgers {

/// L-infinity and discrete L2 norms of a pointwise difference.
struct ErrorReport {
    double l_inf = 0.0;
    double l_2 = 0.0;
    std::size_t n_points = 0;
    double t = 0.0;
};

/// l_inf = max |e|, l_2 = sqrt(dx * sum e^2). With dx = 1/(2M) over the
/// collocation grid, l_2 <= l_inf always.
ErrorReport error_norms(const std::vector<double>& numeric,
                        const std::vector<double>& reference, double dx, double t = 0.0);

struct ConvergenceRow {
    int J = 0;
    double l_inf = 0.0;
    double l_2 = 0.0;
    std::optional<double> ratio_to_previous;  // l_2 of previous row / l_2 here
    std::optional<double> observed_order;     // log2 of that ratio
};

/// Solve at each resolution level and report errors against the closed form,
/// or against a certified finite-difference reference when none exists.
std::vector<ConvergenceRow> convergence_study(const ProblemSpec& spec, double dt, double T,
                                              const std::vector<int>& J_list,
                                              double oracle_accuracy = 1e-6);

/// L2 error bound at level J for a solution with |w_x| <= K:
/// 2 K 2^{-(5/2 (J+1) + 1)} / (1 - 2^{-5/2}). Successive bounds shrink by
/// exactly 2^{-5/2}; loose in practice, useful as a sanity ceiling.
double theoretical_bound(int J, double K);

}  // namespace gburgers
