#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nbres/graph.hpp"
#include "nbres/shift_space.hpp"

namespace nbres {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// 2m x 2m 0/1 successor matrix of the directed-edge dynamics.
struct NonBacktrackingMatrix {
    ComplexMatrix S;
    int q = 0;
};

struct SpectrumEntry {
    Complex z;                             // cluster mean
    int algebraic_multiplicity = 0;
    std::vector<ComplexVector> right_basis; // S v = z v
    std::vector<ComplexVector> left_basis;  // S^T w = z w
    double residual = 0.0;                  // max eigen-equation residual over bases
    bool defect_flag = false;

    ResonantState right_state(int k) const;
    ResonantState left_state(int k) const;
};

NonBacktrackingMatrix hashimoto(const RegularGraph& g);

/// Full spectrum, clustered, with right/left null-space bases per cluster
/// and bilinear biorthogonalization (w_i^T v_j = delta_ij) where possible.
std::vector<SpectrumEntry> eigensolve(const NonBacktrackingMatrix& M,
                                      double tol_cluster = 1e-8);

std::vector<Complex> resonances(const RegularGraph& g);

/// Right and left eigenspace bases for the cluster nearest z; throws
/// NotAResonanceError if z is farther than tol from every eigenvalue.
std::pair<std::vector<ComplexVector>, std::vector<ComplexVector>>
eigenspace(const RegularGraph& g, Complex z, double tol = 1e-6);

/// |det(I - u S) - (1-u^2)^{m-n} det(I - u A + q u^2 I)|, the Ihara–Bass
/// identity residual used as an independent oracle.
double bass_check(const RegularGraph& g, Complex u);
/// Same residual divided by max(|lhs|, |rhs|, 1).
double bass_check_relative(const RegularGraph& g, Complex u);

ComplexMatrix adjacency_matrix(const RegularGraph& g);

} // namespace nbres
