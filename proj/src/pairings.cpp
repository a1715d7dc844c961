#include "nbres/pairings.hpp"

namespace nbres {

namespace {

void check_pair(const RegularGraph& g, const ResonantState& u_plus,
                const ResonantState& u_minus) {
    if (u_plus.orientation != Orientation::Plus || u_minus.orientation != Orientation::Minus)
        throw OrientationMismatchError("pairing needs a (+, −) pair of states");
    if (static_cast<int>(u_plus.edge_values.size()) != g.n_directed_edges() ||
        static_cast<int>(u_minus.edge_values.size()) != g.n_directed_edges())
        throw GraphMismatchError("state edge vector does not match graph");
}

} // namespace

VertexFunction vertex_pushforward(const RegularGraph& g, const ResonantState& u) {
    if (static_cast<int>(u.edge_values.size()) != g.n_directed_edges())
        throw GraphMismatchError("state edge vector does not match graph");
    VertexFunction out(g.n_vertices(), 0.0);
    for (int e = 0; e < g.n_directed_edges(); ++e) {
        const int x = u.orientation == Orientation::Plus ? g.iota(e) : g.tau(e);
        out[x] += u.edge_values[e];
    }
    return out;
}

EdgeFunction edge_pushforward(const RegularGraph& g, const ResonantState& u) {
    if (static_cast<int>(u.edge_values.size()) != g.n_directed_edges())
        throw GraphMismatchError("state edge vector does not match graph");
    return u.edge_values;
}

Complex vertex_pairing(const RegularGraph& g, const ResonantState& u_plus,
                       const ResonantState& u_minus) {
    check_pair(g, u_plus, u_minus);
    const VertexFunction a = vertex_pushforward(g, u_plus);
    const VertexFunction b = vertex_pushforward(g, u_minus);
    Complex sum = 0.0;
    for (int x = 0; x < g.n_vertices(); ++x) sum += a[x] * b[x];
    return sum;
}

Complex edge_pairing(const RegularGraph& g, const ResonantState& u_plus,
                     const ResonantState& u_minus) {
    check_pair(g, u_plus, u_minus);
    Complex sum = 0.0;
    for (int e = 0; e < g.n_directed_edges(); ++e)
        sum += u_plus.edge_values[e] * u_minus.edge_values[e];
    return sum;
}

Complex modified_edge_pairing(const RegularGraph& g, const ResonantState& u_plus,
                              const ResonantState& u_minus) {
    check_pair(g, u_plus, u_minus);
    Complex sum = 0.0;
    for (int e = 0; e < g.n_directed_edges(); ++e)
        sum += u_plus.edge_values[RegularGraph::op(e)] * u_minus.edge_values[e];
    return sum;
}

Complex geodesic_pairing_formula(const RegularGraph& g, const ResonantState& u_plus,
                                 const ResonantState& u_minus) {
    return vertex_pairing(g, u_plus, u_minus) - modified_edge_pairing(g, u_plus, u_minus);
}

Complex geodesic_pairing_direct(const RegularGraph& g, const ResonantState& u_plus,
                                const ResonantState& u_minus) {
    check_pair(g, u_plus, u_minus);
    Complex sum = 0.0;
    for (int e_minus = 0; e_minus < g.n_directed_edges(); ++e_minus) {
        const int x = g.tau(e_minus);
        for (int e_plus : g.out_edges(x))
            if (e_plus != RegularGraph::op(e_minus))
                sum += u_minus.edge_values[e_minus] * u_plus.edge_values[e_plus];
    }
    return sum;
}

Complex p2_pairing(const RegularGraph& g, const ResonantState& u_plus,
                   const ResonantState& u_minus) {
    check_pair(g, u_plus, u_minus);
    Complex sum = 0.0;
    for (int e_minus = 0; e_minus < g.n_directed_edges(); ++e_minus)
        for (int e_plus : g.out_edges(g.tau(e_minus)))
            sum += u_minus.edge_values[e_minus] * u_plus.edge_values[e_plus];
    return sum;
}

} // namespace nbres
