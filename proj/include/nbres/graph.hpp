#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nbres/errors.hpp"

namespace nbres {

/// Finite connected simple (q+1)-regular graph stored as directed edges.
///
/// Undirected edge i yields directed edges 2i and 2i+1, so the
/// orientation-reversal involution flips the low bit.
class RegularGraph {
public:
    using EdgeIdx = int;
    using VertexIdx = int;

    // pairs are undirected edges; validates all regularity invariants
    static RegularGraph build_from_undirected_edges(
        int n, const std::vector<std::pair<int, int>>& pairs);

    // name in {complete, cycle, complete_bipartite, petersen, hypercube3};
    // param carries n for the parametrized families, ignored otherwise
    static RegularGraph generate_named(const std::string& name, int param = 0);

    // configuration model with rejection of loops/multi-edges/disconnection
    static RegularGraph generate_random_regular(int n, int degree, std::uint64_t seed,
                                                int rejection_budget = 10000);

    static RegularGraph read_edge_list(const std::string& path);
    static RegularGraph parse_edge_list(const std::string& text);
    void write_edge_list(const std::string& path) const;
    std::string format_edge_list() const;

    int n_vertices() const { return n_; }
    int n_undirected_edges() const { return static_cast<int>(edges_.size()) / 2; }
    int n_directed_edges() const { return static_cast<int>(edges_.size()); }
    int q() const { return q_; }
    int degree() const { return q_ + 1; }

    VertexIdx iota(EdgeIdx e) const { return edges_[e].first; }
    VertexIdx tau(EdgeIdx e) const { return edges_[e].second; }
    static EdgeIdx op(EdgeIdx e) { return e ^ 1; }

    // directed edges e' with iota(e') == tau(e), e' != op(e); always q of them
    const std::vector<EdgeIdx>& successors(EdgeIdx e) const { return successors_[e]; }
    // directed edges e' with e in successors(e'); always q of them
    const std::vector<EdgeIdx>& predecessors(EdgeIdx e) const { return predecessors_[e]; }
    // all e with iota(e) == x; always q+1 of them, sorted
    const std::vector<EdgeIdx>& out_edges(VertexIdx x) const { return out_edges_[x]; }

    bool operator==(const RegularGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    RegularGraph() = default;
    void build_adjacency();

    int n_ = 0;
    int q_ = 0;
    std::vector<std::pair<VertexIdx, VertexIdx>> edges_; // (iota, tau) per directed edge
    std::vector<std::vector<EdgeIdx>> out_edges_;
    std::vector<std::vector<EdgeIdx>> successors_;
    std::vector<std::vector<EdgeIdx>> predecessors_;
};

} // namespace nbres
