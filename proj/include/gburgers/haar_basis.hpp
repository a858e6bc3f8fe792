#pragma once

#include <cstddef>
#include <vector>

namespace gburgers {

/// Dense row-major matrix, sized for the small collocation tables used here.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Dilation/translation decomposition of a wavelet ordinal, i = m + k + 1.
struct WaveletIndex {
    int i = 0;         // ordinal, >= 2
    int j = 0;         // dilation level
    int m = 1;         // 2^j
    int k = 0;         // translation, 0 <= k < m
    double eta1 = 0.0; // k/m
    double eta2 = 0.0; // (k+0.5)/m
    double eta3 = 0.0; // (k+1)/m
};

/// Invert i = m + k + 1 for i >= 2. Ordinal 1 is the scaling function and
/// carries no (j, k); passing it (or anything below 2) is an error.
WaveletIndex index_from_ordinal(int i);

/// h_i(x) on [0, 1]. Branches are half-open: +1 on [eta1, eta2), -1 on
/// [eta2, eta3), 0 elsewhere; the scaling function h_1 is 1 on [0, 1).
double haar_eval(int i, double x);

/// sigma-fold integral of h_i from 0 to x, sigma in {1, 2}. For the scaling
/// function: p_{1,1}(x) = x, p_{2,1}(x) = x^2/2.
double p_eval(int sigma, int i, double x);

/// Collocation grid and precomputed wavelet/integral tables at resolution J.
/// Rows are collocation points; column c holds ordinal i = c + 1. Immutable
/// after construction and safe to share across concurrent solver runs.
struct HaarBasis {
    int J = 0;
    int M = 1;                  // 2^J
    std::size_t n = 2;          // 2M, basis size
    std::vector<double> x;      // x_k = (k - 0.5)/(2M), k = 1..2M
    Matrix H;                   // H(k, i-1)  = h_i(x_k)
    Matrix P1;                  // P1(k, i-1) = p_{1,i}(x_k)
    Matrix P2;                  // P2(k, i-1) = p_{2,i}(x_k)
    std::vector<double> p2_one; // p_{2,i}(1): 0.5 for i=1, 1/(4 m^2) for i>1
};

/// Build the basis at resolution level J (0 <= J <= 12).
HaarBasis build_basis(int J);

/// Coefficients c with sum_i c_i h_i(x_k) = samples[k] for every collocation
/// point. The collocation matrix H satisfies H^T H = diag(2M 2^-j), so the
/// square system is solved exactly by the scaled transpose.
std::vector<double> expand(const std::vector<double>& samples, const HaarBasis& basis);

enum class ReconstructMode { Value, FirstIntegral, SecondIntegral };

/// sum_i coeffs_i * {h_i(x) | p_{1,i}(x) | p_{2,i}(x)} at an arbitrary x.
double reconstruct(const std::vector<double>& coeffs, const HaarBasis& basis,
                   ReconstructMode mode, double x);

}  // namespace gburgers
