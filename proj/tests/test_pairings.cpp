#include <doctest.h>

#include <cmath>

#include "nbres/pairings.hpp"
#include "nbres/report.hpp"
#include "nbres/spectra.hpp"

using namespace nbres;
using doctest::Approx;

namespace {

ResonantState all_ones(const RegularGraph& g, Orientation o, Complex z) {
    return {o, z, std::vector<Complex>(g.n_directed_edges(), 1.0)};
}

ResonantState scaled(ResonantState u, Complex c) {
    for (auto& v : u.edge_values) v *= c;
    return u;
}

} // namespace

TEST_CASE("pushforwards on K4") {
    const RegularGraph k4 = RegularGraph::generate_named("complete", 4);
    const ResonantState up = all_ones(k4, Orientation::Plus, 2.0);

    const VertexFunction vx = vertex_pushforward(k4, up);
    for (const Complex& v : vx) CHECK(v.real() == Approx(3.0));

    CHECK(edge_pushforward(k4, up) == up.edge_values);

    // linearity
    const VertexFunction scaled_vx = vertex_pushforward(k4, scaled(up, {2.0, 1.0}));
    for (int x = 0; x < 4; ++x)
        CHECK(std::abs(scaled_vx[x] - Complex(2.0, 1.0) * vx[x]) <= 1e-14);
}

TEST_CASE("C3 minus-state pushforward") {
    const RegularGraph c3 = RegularGraph::generate_named("cycle", 3);
    const VertexFunction vx = vertex_pushforward(c3, all_ones(c3, Orientation::Minus, 1.0));
    for (const Complex& v : vx) CHECK(v.real() == Approx(2.0));
}

TEST_CASE("K4 all-ones pairing anchors") {
    const RegularGraph k4 = RegularGraph::generate_named("complete", 4);
    const ResonantState up = all_ones(k4, Orientation::Plus, 2.0);
    const ResonantState um = all_ones(k4, Orientation::Minus, 2.0);

    CHECK(vertex_pairing(k4, up, um).real() == Approx(36.0));
    CHECK(edge_pairing(k4, up, um).real() == Approx(12.0));
    CHECK(modified_edge_pairing(k4, up, um).real() == Approx(12.0));
    CHECK(geodesic_pairing_formula(k4, up, um).real() == Approx(24.0));
    CHECK(geodesic_pairing_direct(k4, up, um).real() == Approx(24.0));
    CHECK(p2_pairing(k4, up, um).real() == Approx(36.0));
}

TEST_CASE("C3 geodesic pairing by hand count") {
    const RegularGraph c3 = RegularGraph::generate_named("cycle", 3);
    const ResonantState up = all_ones(c3, Orientation::Plus, 1.0);
    const ResonantState um = all_ones(c3, Orientation::Minus, 1.0);
    CHECK(geodesic_pairing_direct(c3, up, um).real() == Approx(6.0));
}

TEST_CASE("support bookkeeping for single-edge test doubles") {
    const RegularGraph k4 = RegularGraph::generate_named("complete", 4);
    ResonantState up{Orientation::Plus, 1.0, std::vector<Complex>(12, 0.0)};
    ResonantState um{Orientation::Minus, 1.0, std::vector<Complex>(12, 0.0)};
    up.edge_values[4] = {2.0, 0.0};
    um.edge_values[RegularGraph::op(4)] = {3.0, 0.0};
    CHECK(edge_pairing(k4, up, um) == Complex(0.0));
    CHECK(modified_edge_pairing(k4, up, um) == Complex(6.0));
}

TEST_CASE("bilinearity and zero states") {
    const RegularGraph k4 = RegularGraph::generate_named("complete", 4);
    const ResonantState up = all_ones(k4, Orientation::Plus, 2.0);
    const ResonantState um = all_ones(k4, Orientation::Minus, 2.0);
    const ResonantState zero{Orientation::Plus, 2.0, std::vector<Complex>(12, 0.0)};
    const Complex c{0.7, -1.3};

    CHECK(vertex_pairing(k4, zero, um) == Complex(0.0));
    CHECK(geodesic_pairing_formula(k4, zero, um) == Complex(0.0));
    CHECK(p2_pairing(k4, zero, um) == Complex(0.0));

    for (auto pairing : {vertex_pairing, edge_pairing, modified_edge_pairing,
                         geodesic_pairing_formula, geodesic_pairing_direct, p2_pairing}) {
        const Complex base = pairing(k4, up, um);
        CHECK(std::abs(pairing(k4, scaled(up, c), um) - c * base) <= 1e-12 * std::abs(base));
        CHECK(std::abs(pairing(k4, up, scaled(um, c)) - c * base) <= 1e-12 * std::abs(base));
    }
}

TEST_CASE("identities (i) and (ii) on random eigen-pairs") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const RegularGraph g = RegularGraph::generate_random_regular(10, 3, seed);
        const auto entries = eigensolve(hashimoto(g));
        int tested = 0;
        for (std::size_t ci = 0; ci < entries.size(); ++ci) {
            const auto& e = entries[ci];
            if (e.defect_flag) continue;
            for (int s = 0; s < 3; ++s) {
                const ResonantState up =
                    sample_state(Orientation::Plus, e.z, e.right_basis, 100 * ci + s);
                const ResonantState um =
                    sample_state(Orientation::Minus, e.z, e.left_basis, 100 * ci + s + 50);
                const Complex direct = geodesic_pairing_direct(g, up, um);
                const Complex formula = geodesic_pairing_formula(g, up, um);
                const Complex p2 = p2_pairing(g, up, um);
                const Complex vx = vertex_pairing(g, up, um);
                const double scale = std::max(up.max_abs() * um.max_abs(), 1.0);
                CHECK(std::abs(direct - formula) <= 1e-10 * scale * g.n_directed_edges());
                CHECK(std::abs(p2 - vx) <= 1e-12 * scale * g.n_directed_edges());
                ++tested;
            }
        }
        CHECK(tested >= 25);
    }
}

TEST_CASE("orthogonality at distinct resonances") {
    const RegularGraph g = RegularGraph::generate_named("petersen");
    const auto entries = eigensolve(hashimoto(g));
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (entries[i].defect_flag || entries[j].defect_flag) continue;
            if (std::abs(entries[i].z - entries[j].z) <= 1e-7) continue;
            const ResonantState up =
                sample_state(Orientation::Plus, entries[i].z, entries[i].right_basis, i);
            const ResonantState um =
                sample_state(Orientation::Minus, entries[j].z, entries[j].left_basis, j);
            const double scale =
                up.max_abs() * um.max_abs() * g.n_directed_edges();
            CHECK(std::abs(geodesic_pairing_formula(g, up, um)) <= 1e-8 * scale);
        }
}

TEST_CASE("mismatched inputs are rejected") {
    const RegularGraph k4 = RegularGraph::generate_named("complete", 4);
    const ResonantState up = all_ones(k4, Orientation::Plus, 2.0);
    CHECK_THROWS_AS(vertex_pairing(k4, up, up), OrientationMismatchError);
    ResonantState short_state{Orientation::Minus, 2.0, std::vector<Complex>(6, 1.0)};
    CHECK_THROWS_AS(vertex_pairing(k4, up, short_state), GraphMismatchError);
}
