#include "gburgers/metrics.hpp"

#include <cmath>
#include <string>

#include "gburgers/errors.hpp"
#include "gburgers/fd_oracle.hpp"
#include "gburgers/stepper.hpp"

namespace gburgers {

ErrorReport error_norms(const std::vector<double>& numeric,
                        const std::vector<double>& reference, double dx, double t) {
    if (numeric.size() != reference.size()) {
        throw ConfigError("error_norms: length mismatch (" + std::to_string(numeric.size()) +
                          " vs " + std::to_string(reference.size()) + ")");
    }
    ErrorReport report;
    report.n_points = numeric.size();
    report.t = t;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double e = std::abs(numeric[i] - reference[i]);
        report.l_inf = std::max(report.l_inf, e);
        sum_sq += e * e;
    }
    report.l_2 = std::sqrt(dx * sum_sq);
    return report;
}

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& spec, double dt, double T,
                                              const std::vector<int>& J_list,
                                              double oracle_accuracy) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(J_list.size());
    for (int J : J_list) {
        SolverConfig config{J, dt, T};
        const RunResult result = run(spec, config);
        const std::vector<double>& w = result.final_state.w;
        const std::size_t n = w.size();

        std::vector<double> x_star(n);
        for (std::size_t k = 0; k < n; ++k) {
            x_star[k] = spec.a + spec.length() * (k + 0.5) / static_cast<double>(n);
        }
        std::vector<double> reference(n);
        if (spec.has_exact()) {
            for (std::size_t k = 0; k < n; ++k) reference[k] = evaluate_exact(spec, x_star[k], T);
        } else {
            reference = fd_reference_at(spec, x_star, T, oracle_accuracy).values;
        }

        const ErrorReport report = error_norms(w, reference, 1.0 / static_cast<double>(n), T);
        ConvergenceRow row;
        row.J = J;
        row.l_inf = report.l_inf;
        row.l_2 = report.l_2;
        if (!rows.empty() && row.l_2 > 0.0) {
            row.ratio_to_previous = rows.back().l_2 / row.l_2;
            row.observed_order = std::log2(*row.ratio_to_previous);
        }
        rows.push_back(row);
    }
    return rows;
}

double theoretical_bound(int J, double K) {
    return 2.0 * K * std::exp2(-(2.5 * (J + 1) + 1.0)) / (1.0 - std::exp2(-2.5));
}

}  // namespace gburgers
