#pragma once

#include <vector>

#include "nbres/graph.hpp"
#include "nbres/shift_space.hpp"

namespace nbres {

using VertexFunction = std::vector<Complex>; // indexed by vertices
using EdgeFunction = std::vector<Complex>;   // indexed by directed edges

/// (pi_{+,*}u)(x) = sum over edges leaving x of f(e); for orientation −
/// the sum runs over edges arriving at x.
VertexFunction vertex_pushforward(const RegularGraph& g, const ResonantState& u);

/// Identity on edge values (depth-1 cylinder evaluation).
EdgeFunction edge_pushforward(const RegularGraph& g, const ResonantState& u);

// sum_x (pi_{+,*}u_plus)(x) * (pi_{-,*}u_minus)(x)
Complex vertex_pairing(const RegularGraph& g, const ResonantState& u_plus,
                       const ResonantState& u_minus);

// sum_e f(e) g(e)
Complex edge_pairing(const RegularGraph& g, const ResonantState& u_plus,
                     const ResonantState& u_minus);

// sum_e f(op(e)) g(e)
Complex modified_edge_pairing(const RegularGraph& g, const ResonantState& u_plus,
                              const ResonantState& u_minus);

// vertex pairing minus modified edge pairing
Complex geodesic_pairing_formula(const RegularGraph& g, const ResonantState& u_plus,
                                 const ResonantState& u_minus);

// literal sum over joinable pairs: g(e_minus) f(e_plus) with
// tau(e_minus) == iota(e_plus) and e_plus != op(e_minus)
Complex geodesic_pairing_direct(const RegularGraph& g, const ResonantState& u_plus,
                                const ResonantState& u_minus);

// same triple sum without the opposite-edge exclusion; equals vertex_pairing
Complex p2_pairing(const RegularGraph& g, const ResonantState& u_plus,
                   const ResonantState& u_minus);

} // namespace nbres
