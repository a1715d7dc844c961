#include "nbres/tree_cover.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nbres {

TruncatedCover TruncatedCover::unfold(const RegularGraph& g, int base_vertex, int depth) {
    if (depth < 2) throw DepthTooSmallError("cover depth must be at least 2");
    if (base_vertex < 0 || base_vertex >= g.n_vertices())
        throw ParamOutOfRangeError("base vertex out of range");

    TruncatedCover cover;
    cover.base_ = &g;
    cover.depth_limit_ = depth;
    cover.parent_ = {-1};
    cover.depth_ = {0};
    cover.base_vertex_ = {base_vertex};
    cover.label_ = {-1};
    cover.children_ = {{}};

    // breadth-first, children in base-edge order: node ids are stable when
    // the same graph is unfolded to a larger depth
    for (int x = 0; x < static_cast<int>(cover.parent_.size()); ++x) {
        if (cover.depth_[x] == depth) continue;
        for (int e : g.out_edges(cover.base_vertex_[x])) {
            if (x != 0 && e == RegularGraph::op(cover.label_[x])) continue;
            const int child = static_cast<int>(cover.parent_.size());
            cover.parent_.push_back(x);
            cover.depth_.push_back(cover.depth_[x] + 1);
            cover.base_vertex_.push_back(g.tau(e));
            cover.label_.push_back(e);
            cover.children_.push_back({});
            cover.children_[x].push_back(child);
        }
    }
    for (int x = 0; x < cover.n_nodes(); ++x)
        if (cover.depth_[x] == depth) cover.frontier_.push_back(x);
    return cover;
}

std::optional<int> TruncatedCover::child_by_label(int x, int base_edge) const {
    for (int c : children_[x])
        if (label_[c] == base_edge) return c;
    return std::nullopt;
}

int TruncatedCover::lca(int a, int b) const {
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
    }
    return a;
}

int TruncatedCover::tree_distance(int a, int b) const {
    const int y = lca(a, b);
    return depth_[a] + depth_[b] - 2 * depth_[y];
}

bool TruncatedCover::is_ancestor(int a, int b) const {
    while (depth_[b] > depth_[a]) b = parent_[b];
    return a == b;
}

int TruncatedCover::next_on_path(int a, int b) const {
    if (a == b) throw ParamOutOfRangeError("no next node on empty path");
    if (!is_ancestor(a, b)) return parent_[a];
    while (parent_[b] != a) b = parent_[b];
    return b;
}

int horocycle_bracket(const TruncatedCover& cover, int x, const BoundaryCylinder& omega) {
    const int y = cover.lca(x, omega.node);
    return 2 * cover.depth(y) - cover.depth(x);
}

Complex poisson_kernel(Complex z, const TruncatedCover& cover, int x,
                       const BoundaryCylinder& omega) {
    if (z == Complex(0.0)) throw ZeroEigenvalueError("z must be nonzero");
    return std::pow(z, horocycle_bracket(cover, x, omega));
}

Complex measure_value(const TruncatedCover& cover, const FiniteBoundaryMeasure& mu,
                      const BoundaryCylinder& omega) {
    Complex sum = 0.0;
    const auto& frontier = cover.frontier();
    for (std::size_t i = 0; i < frontier.size(); ++i)
        if (cover.is_ancestor(omega.node, frontier[i])) sum += mu.frontier_values[i];
    return sum;
}

FiniteBoundaryMeasure measure_from_state(const TruncatedCover& cover,
                                         const ResonantState& u) {
    if (u.orientation != Orientation::Plus)
        throw OrientationMismatchError("boundary measures are built from + states");
    if (u.z == Complex(0.0)) throw ZeroEigenvalueError("z must be nonzero");
    const int d = cover.depth_limit();
    FiniteBoundaryMeasure mu;
    const Complex scale = std::pow(u.z, -(d - 1));
    for (int c : cover.frontier())
        mu.frontier_values.push_back(scale * u.edge_values[cover.incoming_label(c)]);

    // finite additivity on interior cylinders == eigen-recursion of u
    const double tol = 1e-9 * (1.0 + std::abs(scale)) * (1.0 + u.max_abs());
    for (int c = 1; c < cover.n_nodes(); ++c) {
        if (cover.is_frontier(c)) continue;
        const Complex expected = std::pow(u.z, -cover.depth(cover.parent(c))) *
                                 u.edge_values[cover.incoming_label(c)];
        if (std::abs(measure_value(cover, mu, {c}) - expected) > tol)
            throw EigenResidualTooLargeError(
                "state does not satisfy the eigen-recursion: measure not additive");
    }
    return mu;
}

std::vector<Complex> poisson_transform(Complex z, const TruncatedCover& cover,
                                       const FiniteBoundaryMeasure& mu) {
    if (z == Complex(0.0)) throw ZeroEigenvalueError("z must be nonzero");
    std::vector<Complex> out(cover.n_nodes(), 0.0);
    const auto& frontier = cover.frontier();
    for (int x = 0; x < cover.n_nodes(); ++x) {
        Complex sum = 0.0;
        for (std::size_t i = 0; i < frontier.size(); ++i)
            sum += std::pow(z, horocycle_bracket(cover, x, {frontier[i]})) *
                   mu.frontier_values[i];
        out[x] = sum;
    }
    return out;
}

std::vector<Complex> edge_poisson_transform(Complex z, const TruncatedCover& cover,
                                            const FiniteBoundaryMeasure& mu) {
    if (z == Complex(0.0)) throw ZeroEigenvalueError("z must be nonzero");
    std::vector<Complex> out(cover.n_nodes(), 0.0); // index = child node of away edge
    for (int c = 1; c < cover.n_nodes(); ++c) {
        // iota of the away edge is an ancestor of every refining frontier
        // cylinder, so the bracket is depth(parent) throughout
        out[c] = std::pow(z, cover.depth(cover.parent(c))) * measure_value(cover, mu, {c});
    }
    return out;
}

std::vector<Complex> lift_state(const TruncatedCover& cover, const ResonantState& u) {
    std::vector<Complex> out(cover.n_tree_edges());
    for (int te = 0; te < cover.n_tree_edges(); ++te)
        out[te] = u.edge_values[cover.edge_base(te)];
    return out;
}

DeckTransform deck_transform(const TruncatedCover& cover, int target) {
    if (target < 0 || target >= cover.n_nodes() ||
        cover.base_vertex(target) != cover.base_vertex(cover.root()))
        throw InvalidTargetError("target must project to the root's base vertex");

    DeckTransform gamma;
    gamma.image.assign(cover.n_nodes(), -1);
    gamma.image[cover.root()] = target;
    for (int x = 0; x < cover.n_nodes(); ++x) {
        const int y = gamma.image[x];
        if (y < 0) continue;
        for (int c : cover.children(x)) {
            const int lbl = cover.incoming_label(c);
            // the unique tree edge at y projecting to lbl: either the child
            // with that label or the edge back to y's parent
            if (auto yc = cover.child_by_label(y, lbl)) {
                gamma.image[c] = *yc;
            } else if (y != cover.root() &&
                       lbl == RegularGraph::op(cover.incoming_label(y))) {
                gamma.image[c] = cover.parent(y);
            }
            // otherwise the image would leave the truncation: stays -1
        }
    }
    return gamma;
}

TreeAutomorphism root_automorphism(const TruncatedCover& cover, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TreeAutomorphism g;
    g.image.assign(cover.n_nodes(), -1);
    g.image[cover.root()] = cover.root();
    for (int x = 0; x < cover.n_nodes(); ++x) {
        const int y = g.image[x];
        const auto& cx = cover.children(x);
        std::vector<int> cy = cover.children(y);
        std::shuffle(cy.begin(), cy.end(), rng);
        for (std::size_t k = 0; k < cx.size(); ++k) g.image[cx[k]] = cy[k];
    }
    return g;
}

namespace {

std::vector<int> geodesic_segment(const TruncatedCover& cover, const BoundaryCylinder& w1,
                                  const BoundaryCylinder& w2) {
    const int c1 = w1.node, c2 = w2.node;
    if (c1 == c2 || cover.is_ancestor(c1, c2) || cover.is_ancestor(c2, c1))
        throw ParamOutOfRangeError("boundary cylinders must have disjoint supports");
    const int top = cover.lca(c1, c2);
    std::vector<int> path;
    for (int a = c1; a != top; a = cover.parent(a)) path.push_back(a);
    path.push_back(top);
    std::vector<int> tail;
    for (int b = c2; b != top; b = cover.parent(b)) tail.push_back(b);
    path.insert(path.end(), tail.rbegin(), tail.rend());
    return path;
}

} // namespace

int distance_to_geodesic(const TruncatedCover& cover, int x, const BoundaryCylinder& w1,
                         const BoundaryCylinder& w2) {
    const auto path = geodesic_segment(cover, w1, w2);
    // inside either cylinder the continuation of the geodesic is not
    // determined by the truncation
    if ((cover.is_ancestor(w1.node, x) && x != w1.node) ||
        (cover.is_ancestor(w2.node, x) && x != w2.node))
        throw GeodesicLeavesTruncationError(
            "distance is cylinder-dependent below the defining edges");
    int best = cover.tree_distance(x, path[0]);
    for (int y : path) best = std::min(best, cover.tree_distance(x, y));
    return best;
}

bool s_n_contains(const TruncatedCover& cover, int x, const BoundaryCylinder& w1,
                  const BoundaryCylinder& w2, int n) {
    return distance_to_geodesic(cover, x, w1, w2) <= n;
}

std::vector<int> unique_path(const TruncatedCover& cover, int x, const BoundaryCylinder& w1,
                             const BoundaryCylinder& w2, int n) {
    const auto path = geodesic_segment(cover, w1, w2);
    const int dist = distance_to_geodesic(cover, x, w1, w2);
    if (dist <= n) throw InsideSnError("point is within distance n of the geodesic");
    int target = path[0];
    for (int y : path)
        if (cover.tree_distance(x, y) < cover.tree_distance(x, target)) target = y;

    std::vector<int> chain;
    int a = x;
    for (int step = 0; step <= n; ++step) {
        const int b = cover.next_on_path(a, target);
        chain.push_back(cover.parent(b) == a ? TruncatedCover::away_edge_of(b)
                                             : TruncatedCover::toward_edge_of(a));
        a = b;
    }
    return chain;
}

} // namespace nbres
