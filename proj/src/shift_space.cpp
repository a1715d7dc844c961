#include "nbres/shift_space.hpp"

#include <algorithm>
#include <cmath>

namespace nbres {

namespace {

void validate_chain(const RegularGraph& g, const std::vector<int>& chain) {
    if (chain.empty()) throw FormatError("cylinder chain must be nonempty");
    for (int e : chain)
        if (e < 0 || e >= g.n_directed_edges())
            throw FormatError("edge index out of range in chain");
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        if (g.tau(chain[j]) != g.iota(chain[j + 1]))
            throw FormatError("chain edges not concatenated");
        if (chain[j + 1] == RegularGraph::op(chain[j]))
            throw FormatError("chain backtracks");
    }
}

} // namespace

Cylinder::Cylinder(const RegularGraph& g, Orientation o, std::vector<int> edges)
    : orientation(o), chain(std::move(edges)) {
    validate_chain(g, chain);
}

CylinderFunction CylinderFunction::indicator(const Cylinder& c) {
    CylinderFunction f(c.orientation, c.depth());
    f.terms_[c.chain] = 1.0;
    return f;
}

CylinderFunction& CylinderFunction::add(const RegularGraph& g, const Cylinder& c,
                                        Complex coeff) {
    CylinderFunction single(c.orientation, c.depth());
    single.terms_[c.chain] = coeff;
    return add(g, single);
}

CylinderFunction& CylinderFunction::add(const RegularGraph& g,
                                        const CylinderFunction& other, Complex scale) {
    if (orientation_ != other.orientation_)
        throw OrientationMismatchError("cannot mix orientations in a cylinder function");
    const int target = std::max(depth_, other.depth_);
    *this = normalized_to(g, target);
    CylinderFunction rhs = other.normalized_to(g, target);
    for (const auto& [chain, coeff] : rhs.terms_) {
        Complex& slot = terms_[chain];
        slot += scale * coeff;
        if (slot == Complex(0.0)) terms_.erase(chain);
    }
    return *this;
}

CylinderFunction CylinderFunction::normalized_to(const RegularGraph& g, int depth) const {
    if (depth < depth_) throw FormatError("cannot coarsen a cylinder function");
    if (depth == depth_) return *this;
    CylinderFunction out(orientation_, depth);
    for (const auto& [chain, coeff] : terms_) {
        // refine toward the infinite direction: append successors for +,
        // prepend predecessors for −
        std::vector<std::vector<int>> frontier{chain};
        for (int d = depth_; d < depth; ++d) {
            std::vector<std::vector<int>> next;
            for (const auto& c : frontier) {
                if (orientation_ == Orientation::Plus) {
                    for (int e : g.successors(c.back())) {
                        next.push_back(c);
                        next.back().push_back(e);
                    }
                } else {
                    for (int e : g.predecessors(c.front())) {
                        next.emplace_back();
                        next.back().reserve(c.size() + 1);
                        next.back().push_back(e);
                        next.back().insert(next.back().end(), c.begin(), c.end());
                    }
                }
            }
            frontier = std::move(next);
        }
        for (auto& c : frontier) out.terms_[std::move(c)] += coeff;
    }
    return out;
}

CylinderFunction apply_transfer(const RegularGraph& g, const CylinderFunction& f) {
    const int d = f.depth();
    CylinderFunction out(f.orientation(), std::max(1, d - 1));
    for (const auto& [chain, coeff] : f.terms()) {
        if (d >= 2) {
            std::vector<int> stripped;
            if (f.orientation() == Orientation::Plus)
                stripped.assign(chain.begin() + 1, chain.end());
            else
                stripped.assign(chain.begin(), chain.end() - 1);
            out.add(g, Cylinder(g, f.orientation(), stripped), coeff);
        } else {
            const int e = chain[0];
            const auto& ext = f.orientation() == Orientation::Plus ? g.successors(e)
                                                                   : g.predecessors(e);
            for (int e2 : ext) out.add(g, Cylinder(g, f.orientation(), {e2}), coeff);
        }
    }
    return out;
}

Complex ResonantState::evaluate(const RegularGraph& g, const Cylinder& c) const {
    if (c.orientation != orientation)
        throw OrientationMismatchError("cylinder orientation does not match state");
    if (static_cast<int>(edge_values.size()) != g.n_directed_edges())
        throw GraphMismatchError("state edge vector does not match graph");
    return std::pow(z, 1 - c.depth()) * edge_values[c.deepest_edge()];
}

Complex ResonantState::evaluate(const RegularGraph& g, const CylinderFunction& f) const {
    if (f.orientation() != orientation)
        throw OrientationMismatchError("function orientation does not match state");
    Complex sum = 0.0;
    for (const auto& [chain, coeff] : f.terms())
        sum += coeff * evaluate(g, Cylinder(g, orientation, chain));
    return sum;
}

double ResonantState::max_abs() const {
    double m = 0.0;
    for (const Complex& v : edge_values) m = std::max(m, std::abs(v));
    return m;
}

double ResonantState::eigen_residual(const RegularGraph& g) const {
    double worst = 0.0;
    for (int e = 0; e < g.n_directed_edges(); ++e) {
        Complex sum = 0.0;
        const auto& nbrs = orientation == Orientation::Plus ? g.successors(e)
                                                            : g.predecessors(e);
        for (int e2 : nbrs) sum += edge_values[e2];
        worst = std::max(worst, std::abs(z * edge_values[e] - sum));
    }
    return worst;
}

std::vector<std::vector<int>> enumerate_chains(const RegularGraph& g, int depth) {
    std::vector<std::vector<int>> chains;
    for (int e = 0; e < g.n_directed_edges(); ++e) chains.push_back({e});
    for (int d = 1; d < depth; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& c : chains)
            for (int e : g.successors(c.back())) {
                next.push_back(c);
                next.back().push_back(e);
            }
        chains = std::move(next);
    }
    return chains;
}

ResonantCheckReport check_resonant(const RegularGraph& g, const ResonantState& u,
                                   int depth, double tol) {
    ResonantCheckReport report;
    const double bound = tol * (1.0 + std::abs(u.z)) * u.max_abs();
    for (int d = 1; d <= depth; ++d) {
        for (const auto& chain : enumerate_chains(g, d)) {
            CylinderFunction f = CylinderFunction::indicator(Cylinder(g, u.orientation, chain));
            const Complex lhs = u.evaluate(g, apply_transfer(g, f));
            const Complex rhs = u.z * u.evaluate(g, f);
            const double res = std::abs(lhs - rhs);
            if (res > report.max_residual) {
                report.max_residual = res;
                report.worst_cylinder = chain;
            }
        }
    }
    report.pass = report.max_residual <= bound;
    return report;
}

} // namespace nbres
