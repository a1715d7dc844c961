#pragma once

#include <complex>
#include <map>
#include <vector>

#include "nbres/graph.hpp"

namespace nbres {

using Complex = std::complex<double>;

enum class Orientation { Plus, Minus };

/// Basic open set of the shift space: the chains agreeing with `chain` on
/// their first (orientation +) resp. last (orientation −) |chain| edges.
/// The chain is always stored in concatenation order: tau(chain[j]) ==
/// iota(chain[j+1]), non-backtracking.
struct Cylinder {
    Orientation orientation;
    std::vector<int> chain;

    Cylinder(const RegularGraph& g, Orientation o, std::vector<int> edges);

    int depth() const { return static_cast<int>(chain.size()); }
    // the edge furthest toward the infinite direction: last for +, first for −
    int deepest_edge() const {
        return orientation == Orientation::Plus ? chain.back() : chain.front();
    }
    bool operator<(const Cylinder& other) const { return chain < other.chain; }
    bool operator==(const Cylinder& other) const {
        return orientation == other.orientation && chain == other.chain;
    }
};

/// Finite linear combination of cylinder indicators, all at a common depth.
class CylinderFunction {
public:
    CylinderFunction(Orientation o, int depth) : orientation_(o), depth_(depth) {}

    // sums F + c*1_C after refining everything to a common depth
    static CylinderFunction indicator(const Cylinder& c);
    CylinderFunction& add(const RegularGraph& g, const Cylinder& c, Complex coeff);
    CylinderFunction& add(const RegularGraph& g, const CylinderFunction& other,
                          Complex scale = 1.0);

    // refine all terms to the given (deeper) depth; exact on evaluation
    CylinderFunction normalized_to(const RegularGraph& g, int depth) const;

    Orientation orientation() const { return orientation_; }
    int depth() const { return depth_; }
    const std::map<std::vector<int>, Complex>& terms() const { return terms_; }

private:
    Orientation orientation_;
    int depth_;
    std::map<std::vector<int>, Complex> terms_;
};

/// Transfer operator on cylinder functions: strips the shallow edge of each
/// depth>=2 indicator; at depth 1 sums indicators over one-step extensions.
CylinderFunction apply_transfer(const RegularGraph& g, const CylinderFunction& f);

/// Edge-level representation of a (co)resonant state: for orientation +
/// the vector satisfies z*f(e) = sum over successors, for orientation −
/// z*g(e) = sum over predecessors. All cylinder values follow by z^{1-k}
/// scaling of the deepest edge's value.
struct ResonantState {
    Orientation orientation;
    Complex z;
    std::vector<Complex> edge_values;

    Complex evaluate(const RegularGraph& g, const Cylinder& c) const;
    Complex evaluate(const RegularGraph& g, const CylinderFunction& f) const;

    double max_abs() const;
    // max over edges of |z*f(e) - sum_{succ/pred} f(e')| (unnormalized)
    double eigen_residual(const RegularGraph& g) const;
};

struct ResonantCheckReport {
    bool pass = true;
    double max_residual = 0.0;
    std::vector<int> worst_cylinder;
};

/// Checks |<u, L 1_C> - z <u, 1_C>| <= tol*(1+|z|)*max|edge_values| over
/// every cylinder up to the given depth.
ResonantCheckReport check_resonant(const RegularGraph& g, const ResonantState& u,
                                   int depth, double tol);

/// All admissible chains of the given depth (depth >= 1).
std::vector<std::vector<int>> enumerate_chains(const RegularGraph& g, int depth);

} // namespace nbres
