#include "nbres/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace nbres {

namespace {

// deterministic normalization: largest-magnitude component becomes 1 (real positive)
void normalize_pivot(ComplexVector& v) {
    int pivot = 0;
    double best = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best + 1e-14) {
            best = a;
            pivot = i;
        }
    }
    if (best > 0.0) v /= v[pivot];
}

std::vector<ComplexVector> null_space(const ComplexMatrix& A, int expected_dim,
                                      double sigma_tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const int n = static_cast<int>(sigma.size());
    int dim = 0;
    while (dim < n && sigma[n - 1 - dim] <= sigma_tol) ++dim;
    dim = std::min(dim, expected_dim);
    std::vector<ComplexVector> basis;
    for (int k = 0; k < dim; ++k) {
        ComplexVector v = svd.matrixV().col(n - 1 - k);
        normalize_pivot(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

ResonantState SpectrumEntry::right_state(int k) const {
    const auto& v = right_basis.at(k);
    return {Orientation::Plus, z, {v.data(), v.data() + v.size()}};
}

ResonantState SpectrumEntry::left_state(int k) const {
    const auto& v = left_basis.at(k);
    return {Orientation::Minus, z, {v.data(), v.data() + v.size()}};
}

NonBacktrackingMatrix hashimoto(const RegularGraph& g) {
    const int m2 = g.n_directed_edges();
    NonBacktrackingMatrix M;
    M.q = g.q();
    M.S = ComplexMatrix::Zero(m2, m2);
    for (int e = 0; e < m2; ++e)
        for (int e2 : g.successors(e)) M.S(e, e2) = 1.0;
    return M;
}

ComplexMatrix adjacency_matrix(const RegularGraph& g) {
    ComplexMatrix A = ComplexMatrix::Zero(g.n_vertices(), g.n_vertices());
    for (int e = 0; e < g.n_directed_edges(); ++e) A(g.iota(e), g.tau(e)) = 1.0;
    return A;
}

std::vector<SpectrumEntry> eigensolve(const NonBacktrackingMatrix& M, double tol_cluster) {
    const int m2 = static_cast<int>(M.S.rows());
    Eigen::ComplexEigenSolver<ComplexMatrix> solver;
    solver.compute(M.S, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailureError("QR iteration failed to converge");

    const double norm = M.S.cwiseAbs().rowwise().sum().maxCoeff(); // = q
    std::vector<Complex> eigs(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + m2);
    std::sort(eigs.begin(), eigs.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    // single-linkage clustering: conjugate pairs interleave under the (Re, Im)
    // sort, so merging must look past immediate neighbors
    std::vector<SpectrumEntry> entries;
    std::vector<char> used(eigs.size(), 0);
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> members{i};
        used[i] = 1;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (std::size_t j = i + 1; j < eigs.size(); ++j)
                if (!used[j] &&
                    std::abs(eigs[j] - eigs[members[k]]) <= tol_cluster * norm) {
                    used[j] = 1;
                    members.push_back(j);
                }
        Complex sum = 0.0;
        for (std::size_t k : members) sum += eigs[k];
        SpectrumEntry entry;
        entry.algebraic_multiplicity = static_cast<int>(members.size());
        entry.z = sum / static_cast<double>(entry.algebraic_multiplicity);
        entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
                  return a.z.imag() < b.z.imag();
              });

    const ComplexMatrix identity = ComplexMatrix::Identity(m2, m2);
    const double sigma_tol = 1e-7 * std::max(norm, 1.0);
    for (auto& entry : entries) {
        entry.right_basis = null_space(M.S - entry.z * identity,
                                       entry.algebraic_multiplicity, sigma_tol);
        entry.left_basis = null_space(M.S.transpose() - entry.z * identity,
                                      entry.algebraic_multiplicity, sigma_tol);
        const int k = static_cast<int>(entry.right_basis.size());
        entry.defect_flag = k != entry.algebraic_multiplicity ||
                            static_cast<int>(entry.left_basis.size()) != k || k == 0;

        if (!entry.defect_flag) {
            // bilinear Gram W^T V; singular Gram also marks the cluster defective
            ComplexMatrix V(m2, k), W(m2, k);
            for (int c = 0; c < k; ++c) {
                V.col(c) = entry.right_basis[c];
                W.col(c) = entry.left_basis[c];
            }
            ComplexMatrix G = W.transpose() * V;
            Eigen::JacobiSVD<ComplexMatrix> gsvd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const auto& gs = gsvd.singularValues();
            if (gs[k - 1] <= 1e-8 * std::max(gs[0], 1.0)) {
                entry.defect_flag = true;
            } else {
                ComplexMatrix Wb = W * G.inverse().transpose(); // Wb^T V = I
                for (int c = 0; c < k; ++c) entry.left_basis[c] = Wb.col(c);
            }
        }

        for (const auto& v : entry.right_basis)
            entry.residual = std::max(entry.residual,
                                      (M.S * v - entry.z * v).cwiseAbs().maxCoeff() /
                                          v.cwiseAbs().maxCoeff());
        for (const auto& w : entry.left_basis)
            entry.residual = std::max(entry.residual,
                                      (M.S.transpose() * w - entry.z * w).cwiseAbs().maxCoeff() /
                                          w.cwiseAbs().maxCoeff());
    }
    return entries;
}

std::vector<Complex> resonances(const RegularGraph& g) {
    std::vector<Complex> out;
    for (const auto& entry : eigensolve(hashimoto(g)))
        for (int k = 0; k < entry.algebraic_multiplicity; ++k) out.push_back(entry.z);
    return out;
}

std::pair<std::vector<ComplexVector>, std::vector<ComplexVector>>
eigenspace(const RegularGraph& g, Complex z, double tol) {
    auto entries = eigensolve(hashimoto(g));
    const SpectrumEntry* best = nullptr;
    double best_dist = tol;
    for (const auto& entry : entries) {
        const double d = std::abs(entry.z - z);
        if (d <= best_dist) {
            best_dist = d;
            best = &entry;
        }
    }
    if (!best) throw NotAResonanceError("no eigenvalue within tolerance of given z");
    return {best->right_basis, best->left_basis};
}

double bass_check(const RegularGraph& g, Complex u) {
    const int m2 = g.n_directed_edges();
    const int n = g.n_vertices();
    const int m = m2 / 2;
    const ComplexMatrix S = hashimoto(g).S;
    const Complex lhs =
        (ComplexMatrix::Identity(m2, m2) - u * S).partialPivLu().determinant();
    const ComplexMatrix A = adjacency_matrix(g);
    const Complex det_vertex =
        (ComplexMatrix::Identity(n, n) - u * A +
         static_cast<double>(g.q()) * u * u * ComplexMatrix::Identity(n, n))
            .partialPivLu()
            .determinant();
    const Complex rhs = std::pow(1.0 - u * u, m - n) * det_vertex;
    return std::abs(lhs - rhs);
}

double bass_check_relative(const RegularGraph& g, Complex u) {
    const int m2 = g.n_directed_edges();
    const int n = g.n_vertices();
    const int m = m2 / 2;
    const ComplexMatrix S = hashimoto(g).S;
    const Complex lhs =
        (ComplexMatrix::Identity(m2, m2) - u * S).partialPivLu().determinant();
    const ComplexMatrix A = adjacency_matrix(g);
    const Complex rhs =
        std::pow(1.0 - u * u, m - n) *
        (ComplexMatrix::Identity(n, n) - u * A +
         static_cast<double>(g.q()) * u * u * ComplexMatrix::Identity(n, n))
            .partialPivLu()
            .determinant();
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return std::abs(lhs - rhs) / scale;
}

} // namespace nbres
