#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nbres/graph.hpp"
#include "nbres/pairings.hpp"
#include "nbres/shift_space.hpp"

namespace nbres {

/// Depth-D unfolding of the base graph into a rooted tree. Nodes are
/// created breadth-first with children ordered by base-edge index, so node
/// ids of shared nodes agree between depth-D and depth-(D+1) covers.
///
/// Tree edges: non-root node c owns the directed pair 2(c-1) (away from
/// root, parent -> c) and 2(c-1)+1 (toward root).
class TruncatedCover {
public:
    static TruncatedCover unfold(const RegularGraph& g, int base_vertex, int depth);

    const RegularGraph& base() const { return *base_; }
    int depth_limit() const { return depth_limit_; }
    int n_nodes() const { return static_cast<int>(parent_.size()); }
    int n_tree_edges() const { return 2 * (n_nodes() - 1); }
    int root() const { return 0; }

    int parent(int x) const { return parent_[x]; }
    int depth(int x) const { return depth_[x]; }
    int base_vertex(int x) const { return base_vertex_[x]; }
    // base edge of the away edge parent(x) -> x; undefined for the root
    int incoming_label(int x) const { return label_[x]; }
    const std::vector<int>& children(int x) const { return children_[x]; }
    bool is_frontier(int x) const { return depth_[x] == depth_limit_; }
    // nodes at depth == depth_limit, in node-id order
    const std::vector<int>& frontier() const { return frontier_; }

    // tree-edge accessors
    static int away_edge_of(int node) { return 2 * (node - 1); }
    static int toward_edge_of(int node) { return 2 * (node - 1) + 1; }
    static int edge_op(int te) { return te ^ 1; }
    bool is_away(int te) const { return (te & 1) == 0; }
    int edge_node(int te) const { return te / 2 + 1; } // the non-parent endpoint
    int edge_iota(int te) const {
        return is_away(te) ? parent_[edge_node(te)] : edge_node(te);
    }
    int edge_tau(int te) const {
        return is_away(te) ? edge_node(te) : parent_[edge_node(te)];
    }
    int edge_base(int te) const {
        const int lbl = label_[edge_node(te)];
        return is_away(te) ? lbl : RegularGraph::op(lbl);
    }

    // child of x whose away edge projects to the given base edge, if present
    std::optional<int> child_by_label(int x, int base_edge) const;

    int lca(int a, int b) const;
    int tree_distance(int a, int b) const;
    // next node on the tree path from a to b; requires a != b
    int next_on_path(int a, int b) const;
    bool is_ancestor(int a, int b) const; // a ancestor of (or equal to) b

private:
    const RegularGraph* base_ = nullptr;
    int depth_limit_ = 0;
    std::vector<int> parent_, depth_, base_vertex_, label_;
    std::vector<std::vector<int>> children_;
    std::vector<int> frontier_;
};

/// Boundary cylinder attached to an away-from-root tree edge, identified by
/// the edge's child node.
struct BoundaryCylinder {
    int node = 0; // child endpoint of the defining away edge; must be non-root

    int away_edge() const { return TruncatedCover::away_edge_of(node); }
    bool operator==(const BoundaryCylinder&) const = default;
};

/// Finitely additive complex measure on the cylinder algebra, resolved at
/// frontier level: one value per frontier node, indexed in frontier order.
struct FiniteBoundaryMeasure {
    std::vector<Complex> frontier_values;
};

// <x, omega> = d(root, y) - d(x, y), y the merge point of the rays from the
// root and from x toward the cylinder. Constant on the cylinder whenever x
// is not a strict descendant of the cylinder's node.
int horocycle_bracket(const TruncatedCover& cover, int x, const BoundaryCylinder& omega);

Complex poisson_kernel(Complex z, const TruncatedCover& cover, int x,
                       const BoundaryCylinder& omega);

// sum of frontier values over the frontier cylinders refining omega
Complex measure_value(const TruncatedCover& cover, const FiniteBoundaryMeasure& mu,
                      const BoundaryCylinder& omega);

/// Boundary measure with mu(cyl at frontier edge e) = z^{-depth(iota(e))} *
/// f(base edge of e); finite additivity on coarser cylinders is equivalent
/// to the eigen-recursion of u and is verified on construction.
FiniteBoundaryMeasure measure_from_state(const TruncatedCover& cover,
                                         const ResonantState& u);

// P_z mu(x) = sum over frontier cylinders c of z^{<x,c>} mu(c); indexed by
// node, truncation-independent at interior nodes
std::vector<Complex> poisson_transform(Complex z, const TruncatedCover& cover,
                                       const FiniteBoundaryMeasure& mu);

// edge variant at iota(e), indexed by non-root node (away edges)
std::vector<Complex> edge_poisson_transform(Complex z, const TruncatedCover& cover,
                                            const FiniteBoundaryMeasure& mu);

// pullback f o pi_E, indexed by tree edge
std::vector<Complex> lift_state(const TruncatedCover& cover, const ResonantState& u);

/// Partial tree automorphism moving the root to `target` and matching tree
/// edges by their base-edge projection; image[x] == -1 outside the domain.
struct DeckTransform {
    std::vector<int> image;

    bool in_domain(int x) const { return image[x] >= 0; }
};

DeckTransform deck_transform(const TruncatedCover& cover, int target);

/// Total root-fixing automorphism: independent random child permutation at
/// every node, deterministic in the seed.
struct TreeAutomorphism {
    std::vector<int> image;

    int operator()(int x) const { return image[x]; }
    BoundaryCylinder operator()(const BoundaryCylinder& omega) const {
        return {image[omega.node]};
    }
};

TreeAutomorphism root_automorphism(const TruncatedCover& cover, std::uint64_t seed);

// distance from x to the geodesic segment joining the two cylinders
int distance_to_geodesic(const TruncatedCover& cover, int x, const BoundaryCylinder& w1,
                         const BoundaryCylinder& w2);

bool s_n_contains(const TruncatedCover& cover, int x, const BoundaryCylinder& w1,
                  const BoundaryCylinder& w2, int n);

// the unique length-(n+1) non-backtracking tree-edge chain from x whose last
// edge has both cylinders beyond it; requires distance_to_geodesic > n
std::vector<int> unique_path(const TruncatedCover& cover, int x, const BoundaryCylinder& w1,
                             const BoundaryCylinder& w2, int n);

} // namespace nbres
