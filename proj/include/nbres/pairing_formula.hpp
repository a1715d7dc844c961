#pragma once

#include <vector>

#include "nbres/pairings.hpp"

namespace nbres {

enum class TheoremBranch { Generic, ZSquaredEqualsQ };

struct DecompositionRow {
    int n = 0;
    Complex ic;           // geometric-series part
    Complex ir;           // remainder part
    double sum_residual = 0.0; // |X - (ic + ir)| / scale
};

struct TheoremReport {
    Complex z;
    Complex vertex_pairing;
    Complex geodesic_pairing;
    Complex modified_edge_pairing;
    double theorem_residual = 0.0;
    TheoremBranch branch = TheoremBranch::Generic;
    bool pass = false;
    std::vector<DecompositionRow> decomposition_rows;
    double scale = 1.0;
};

// geod * ((1 - z^{-2}) * sum_{j<n} (q/z^2)^j + (q/z^2)^n)
Complex ic_gamma(Complex geod, Complex z, int q, int n);

// (q/z^2)^n * opE
Complex ir_gamma(Complex opE, Complex z, int q, int n);

// (1 - z^{-2}) * sum_{j<n} (q/z^2)^j + (q/z^2)^n; limit (z^2-1)/(z^2-q)
// for |z| > sqrt(q)
Complex b_integral_closed_form(Complex z, int q, int n);

// c(z) = (1/(q+1)) * (z^{-2} - q) / (z^{-2} - 1)
Complex c_function(Complex z, int q);

/// Checks (z^2 - q) X = (z^2 - 1) geod on a matched eigen-pair and the
/// finite decomposition X = ic_gamma(n) + ir_gamma(n) for n = 0..n_max.
TheoremReport verify_theorem(const RegularGraph& g, Complex z, const ResonantState& u_plus,
                             const ResonantState& u_minus, int n_max = 12,
                             double tol = 1e-8);

} // namespace nbres
