#include "gburgers/haar_basis.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gburgers/errors.hpp"

namespace gburgers {

namespace {

void check_x(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ConfigError("coordinate " + std::to_string(x) + " outside [0, 1]");
    }
}

}  // namespace

WaveletIndex index_from_ordinal(int i) {
    if (i < 2) {
        throw ConfigError("wavelet ordinal must be >= 2, got " + std::to_string(i));
    }
    const int j = std::bit_width(static_cast<unsigned>(i - 1)) - 1;  // floor(log2(i-1))
    const int m = 1 << j;
    const int k = i - m - 1;
    WaveletIndex idx;
    idx.i = i;
    idx.j = j;
    idx.m = m;
    idx.k = k;
    idx.eta1 = static_cast<double>(k) / m;
    idx.eta2 = (k + 0.5) / m;
    idx.eta3 = static_cast<double>(k + 1) / m;
    return idx;
}

double haar_eval(int i, double x) {
    check_x(x);
    if (i == 1) {
        return x < 1.0 ? 1.0 : 0.0;
    }
    const WaveletIndex idx = index_from_ordinal(i);
    if (x >= idx.eta1 && x < idx.eta2) return 1.0;
    if (x >= idx.eta2 && x < idx.eta3) return -1.0;
    return 0.0;
}

double p_eval(int sigma, int i, double x) {
    check_x(x);
    if (sigma != 1 && sigma != 2) {
        throw ConfigError("integration order must be 1 or 2, got " + std::to_string(sigma));
    }
    if (i == 1) {
        return sigma == 1 ? x : 0.5 * x * x;
    }
    const WaveletIndex idx = index_from_ordinal(i);
    if (sigma == 1) {
        if (x < idx.eta1) return 0.0;
        if (x < idx.eta2) return x - idx.eta1;
        if (x < idx.eta3) return idx.eta3 - x;
        return 0.0;
    }
    const double cap = 1.0 / (4.0 * idx.m * idx.m);  // p_{2,i} plateau past eta3
    if (x < idx.eta1) return 0.0;
    if (x < idx.eta2) {
        const double d = x - idx.eta1;
        return 0.5 * d * d;
    }
    if (x < idx.eta3) {
        const double d = idx.eta3 - x;
        return cap - 0.5 * d * d;
    }
    return cap;
}

HaarBasis build_basis(int J) {
    if (J < 0 || J > 12) {
        throw ConfigError("resolution level J must be in [0, 12], got " + std::to_string(J));
    }
    HaarBasis basis;
    basis.J = J;
    basis.M = 1 << J;
    basis.n = static_cast<std::size_t>(2 * basis.M);
    const std::size_t n = basis.n;

    basis.x.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        basis.x[k] = (k + 0.5) / static_cast<double>(n);
    }

    basis.H = Matrix(n, n);
    basis.P1 = Matrix(n, n);
    basis.P2 = Matrix(n, n);
    basis.p2_one.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        const int i = static_cast<int>(c) + 1;
        basis.p2_one[c] = p_eval(2, i, 1.0);
        for (std::size_t k = 0; k < n; ++k) {
            basis.H(k, c) = haar_eval(i, basis.x[k]);
            basis.P1(k, c) = p_eval(1, i, basis.x[k]);
            basis.P2(k, c) = p_eval(2, i, basis.x[k]);
        }
    }
    return basis;
}

std::vector<double> expand(const std::vector<double>& samples, const HaarBasis& basis) {
    const std::size_t n = basis.n;
    if (samples.size() != n) {
        throw ConfigError("expand: got " + std::to_string(samples.size()) +
                          " samples for basis size " + std::to_string(n));
    }
    std::vector<double> coeffs(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += basis.H(k, c) * samples[k];
        }
        const int m = c == 0 ? 1 : index_from_ordinal(static_cast<int>(c) + 1).m;
        coeffs[c] = acc * m / static_cast<double>(n);
    }
    return coeffs;
}

double reconstruct(const std::vector<double>& coeffs, const HaarBasis& basis,
                   ReconstructMode mode, double x) {
    if (coeffs.size() != basis.n) {
        throw ConfigError("reconstruct: coefficient length " + std::to_string(coeffs.size()) +
                          " does not match basis size " + std::to_string(basis.n));
    }
    double acc = 0.0;
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
        const int i = static_cast<int>(c) + 1;
        double phi = 0.0;
        switch (mode) {
            case ReconstructMode::Value: phi = haar_eval(i, x); break;
            case ReconstructMode::FirstIntegral: phi = p_eval(1, i, x); break;
            case ReconstructMode::SecondIntegral: phi = p_eval(2, i, x); break;
        }
        acc += coeffs[c] * phi;
    }
    return acc;
}

}  // namespace gburgers
