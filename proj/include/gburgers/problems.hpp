#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gburgers/haar_basis.hpp"

namespace gburgers {

/// One instance of w_t + w^mu w_x = nu w^delta w_xx on [a, b], with Dirichlet
/// boundary data and an initial profile. Immutable once built; share freely.
struct ProblemSpec {
    int id = 0;  // 1..4 for the built-in problems, 0 for custom specs
    int mu = 0;
    int delta = 0;
    double nu = 0.0;
    double a = 0.0;
    double b = 1.0;
    double t0 = 0.0;
    std::function<double(double)> f;             // w(x*, t0)
    std::function<double(double)> f1;            // w(a, t)
    std::function<double(double)> f2;            // w(b, t)
    std::function<double(double)> fx, fxx;       // optional analytic f', f'' in x*
    std::function<double(double, double)> exact; // optional closed form w(x*, t)
    std::optional<double> c0;
    std::optional<double> sigma;

    double length() const { return b - a; }
    bool has_exact() const { return static_cast<bool>(exact); }
};

struct ProblemParams {
    std::optional<double> c0;
    std::optional<double> sigma;
};

/// The four built-in problem instances:
///   1: mu=2, delta=0 on [0,1], t0=1, decaying ramp with parameter c0 in (0,1)
///   2: mu=1, delta=1 on [0,1], exponential boundary-layer profile, sigma > 0
///   3: mu=1, delta=0 on [0,1], classic Burgers with sine-fraction data, sigma > 1
///   4: mu=2, delta=1 on [0,5], sin(pi x*) initial data, no closed form
ProblemSpec make_test_problem(int id, double nu, const ProblemParams& params = {});

/// Closed-form solution where one exists; throws for problem 4 and custom
/// specs without one. Evaluation is rearranged to avoid overflow for small nu.
double evaluate_exact(const ProblemSpec& spec, double x_star, double t);

/// Largest corner mismatch max(|f(a) - f1(t0)|, |f(b) - f2(t0)|).
double corner_mismatch(const ProblemSpec& spec);

struct InitialSamples {
    std::vector<double> w;
    std::vector<double> wx;   // d/dx in the mapped coordinate (chain factor L)
    std::vector<double> wxx;  // d2/dx2 in the mapped coordinate (factor L^2)
};

/// Initial profile and its derivatives at the collocation points, in mapped
/// coordinates. Uses analytic fx/fxx when the spec provides them, otherwise
/// central finite differences (one-sided at the domain ends).
InitialSamples sample_initial(const ProblemSpec& spec, const HaarBasis& basis);

}  // namespace gburgers
