// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nbres/report.hpp"
#include "nbres/shift_space.hpp"

using namespace nbres;

namespace {

int failures = 0;

void criterion(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("criterion %2d [%s]: %s  (%s)\n", id, title, ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

struct SampledPair {
    Complex z;
    ResonantState up, um;
};

struct GraphCase {
    std::string name;
    RegularGraph g;
    std::vector<SpectrumEntry> entries;
    std::vector<SampledPair> pairs;          // 5 per non-defective cluster
    std::vector<std::size_t> cluster_of;     // cluster index per pair
};

double rel_dev(Complex a, Complex b, double floor_scale) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor_scale});
}

std::map<std::pair<double, double>, int> spectrum_multiset(
    const std::vector<SpectrumEntry>& entries) {
    std::map<std::pair<double, double>, int> out;
    for (const auto& e : entries)
        out[{std::round(e.z.real() * 1e6) / 1e6, std::round(e.z.imag() * 1e6) / 1e6}] +=
            e.algebraic_multiplicity;
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// every boundary point of the cylinder lies beyond the directed tree edge
bool cylinder_beyond_edge(const TruncatedCover& cover, int te, const BoundaryCylinder& w) {
    const int a = cover.edge_iota(te), b = cover.edge_tau(te);
    if (cover.is_ancestor(w.node, a)) return false;
    return cover.next_on_path(a, w.node) == b;
}

void collect_chains(const TruncatedCover& cover, int node, int remaining,
                    std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    std::vector<int> edges;
    for (int c : cover.children(node)) edges.push_back(TruncatedCover::away_edge_of(c));
    if (node != cover.root()) edges.push_back(TruncatedCover::toward_edge_of(node));
    for (int te : edges) {
        if (!current.empty() && te == TruncatedCover::edge_op(current.back())) continue;
        current.push_back(te);
        collect_chains(cover, cover.edge_tau(te), remaining - 1, current, out);
        current.pop_back();
    }
}

} // namespace

int main() {
    // 1: K4 anchor values
    {
        const auto t0 = std::chrono::steady_clock::now();
        const RegularGraph k4 = RegularGraph::generate_named("complete", 4);
        const ResonantState up{Orientation::Plus, 2.0, std::vector<Complex>(12, 1.0)};
        const ResonantState um{Orientation::Minus, 2.0, std::vector<Complex>(12, 1.0)};
        const Complex X = vertex_pairing(k4, up, um);
        const Complex opE = modified_edge_pairing(k4, up, um);
        const Complex geod = geodesic_pairing_formula(k4, up, um);
        const double theorem_abs = std::abs((4.0 - 2.0) * X - (4.0 - 1.0) * geod);
        const Complex ic1 = ic_gamma(geod, 2.0, 2, 1);
        const Complex ir1 = ir_gamma(opE, 2.0, 2, 1);
        const double elapsed = ms_since(t0);
        const bool ok = std::abs(X - 36.0) <= 1e-12 && std::abs(opE - 12.0) <= 1e-12 &&
                        std::abs(geod - 24.0) <= 1e-12 && theorem_abs <= 1e-12 &&
                        std::abs(ic1 - 30.0) <= 1e-12 && std::abs(ir1 - 6.0) <= 1e-12 &&
                        elapsed < 1000.0;
        criterion(1, "K4 anchor", ok,
                  "X=" + fmt(X.real()) + " geod=" + fmt(geod.real()) + " opE=" +
                      fmt(opE.real()) + " theorem_abs=" + fmt(theorem_abs) + " in " +
                      fmt(elapsed) + " ms");
    }

    // suite for criteria 2-7 and 9
    std::vector<GraphCase> suite;
    suite.push_back({"complete:4", RegularGraph::generate_named("complete", 4), {}, {}, {}});
    suite.push_back({"complete:5", RegularGraph::generate_named("complete", 5), {}, {}, {}});
    suite.push_back({"petersen", RegularGraph::generate_named("petersen"), {}, {}, {}});
    suite.push_back({"complete_bipartite:3",
                     RegularGraph::generate_named("complete_bipartite", 3), {}, {}, {}});
    suite.push_back({"hypercube3", RegularGraph::generate_named("hypercube3"), {}, {}, {}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 10 + 2 * static_cast<int>(seed % 6);
        suite.push_back({"random:" + std::to_string(seed),
                         RegularGraph::generate_random_regular(n, 3, seed), {}, {}, {}});
    }

    // 2 + 3: theorem sweep and decomposition rows
    {
        const auto t0 = std::chrono::steady_clock::now();
        double theorem_max = 0.0, decomposition_max = 0.0;
        int pairs_tested = 0;
        bool saw_z2_eq_q_modulus = false;
        for (auto& gc : suite) {
            gc.entries = eigensolve(hashimoto(gc.g));
            for (std::size_t ci = 0; ci < gc.entries.size(); ++ci) {
                const auto& e = gc.entries[ci];
                if (e.defect_flag || std::abs(e.z) < 1e-12) continue;
                for (int s = 0; s < 5; ++s) {
                    SampledPair p;
                    p.z = e.z;
                    p.up = sample_state(Orientation::Plus, e.z, e.right_basis,
                                        1000 * ci + 2 * s);
                    p.um = sample_state(Orientation::Minus, e.z, e.left_basis,
                                        1000 * ci + 2 * s + 1);
                    const TheoremReport tr =
                        verify_theorem(gc.g, e.z, p.up, p.um, 12, 1e-8);
                    theorem_max = std::max(theorem_max, tr.theorem_residual);
                    for (const auto& row : tr.decomposition_rows)
                        decomposition_max = std::max(decomposition_max, row.sum_residual);
                    if (std::abs(std::norm(e.z) - gc.g.q()) < 1e-9 &&
                        std::abs(e.z.imag()) > 1e-6)
                        saw_z2_eq_q_modulus = true;
                    gc.pairs.push_back(std::move(p));
                    gc.cluster_of.push_back(ci);
                    ++pairs_tested;
                }
            }
        }
        const double elapsed = ms_since(t0);
        criterion(2, "theorem sweep", theorem_max <= 1e-8 && elapsed < 60000.0,
                  std::to_string(pairs_tested) + " pairs, residual_max=" + fmt(theorem_max) +
                      " in " + fmt(elapsed) + " ms");
        criterion(3, "decomposition identity",
                  decomposition_max <= 1e-8 && saw_z2_eq_q_modulus,
                  "sum_residual_max=" + fmt(decomposition_max) +
                      (saw_z2_eq_q_modulus ? ", |z|^2=q covered" : ", |z|^2=q MISSING"));
    }

    // 4: oracle equivalences on all tested pairs
    {
        double direct_max = 0.0, p2_max = 0.0;
        for (const auto& gc : suite)
            for (const auto& p : gc.pairs) {
                const double floor_scale = p.up.max_abs() * p.um.max_abs();
                direct_max = std::max(direct_max,
                                      rel_dev(geodesic_pairing_direct(gc.g, p.up, p.um),
                                              geodesic_pairing_formula(gc.g, p.up, p.um),
                                              floor_scale));
                p2_max = std::max(p2_max, rel_dev(p2_pairing(gc.g, p.up, p.um),
                                                  vertex_pairing(gc.g, p.up, p.um),
                                                  floor_scale));
            }
        criterion(4, "oracle equivalences", direct_max <= 1e-10 && p2_max <= 1e-10,
                  "direct_vs_formula=" + fmt(direct_max) + " p2_vs_vertex=" + fmt(p2_max));
    }

    // 5: orthogonality across distinct resonances (sample 0 representatives)
    {
        double ortho_max = 0.0;
        for (const auto& gc : suite)
            for (std::size_t i = 0; i < gc.pairs.size(); i += 5)
                for (std::size_t j = 0; j < gc.pairs.size(); j += 5) {
                    if (std::abs(gc.pairs[i].z - gc.pairs[j].z) <= 10.0 * 1e-8 * gc.g.q())
                        continue;
                    const auto& up = gc.pairs[i].up;
                    const auto& um = gc.pairs[j].um;
                    const double scale = up.max_abs() * um.max_abs() *
                                         gc.g.n_directed_edges();
                    ortho_max = std::max(
                        ortho_max,
                        std::abs(geodesic_pairing_formula(gc.g, up, um)) / scale);
                }
        criterion(5, "orthogonality", ortho_max <= 1e-8, "geod_max=" + fmt(ortho_max));
    }

    // 6: Ihara-Bass residuals and exact K4/Petersen multisets
    {
        double bass_max = 0.0;
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> radius(0.0, 0.3), angle(0.0, 2.0 * M_PI);
        for (const auto& gc : suite)
            for (int k = 0; k < 20; ++k)
                bass_max = std::max(
                    bass_max, bass_check_relative(gc.g, std::polar(radius(rng), angle(rng))));

        const double s7 = std::round(std::sqrt(7.0) / 2 * 1e6) / 1e6;
        const std::map<std::pair<double, double>, int> k4_expected{
            {{2.0, 0.0}, 1}, {{1.0, 0.0}, 3}, {{-1.0, 0.0}, 2},
            {{-0.5, s7}, 3}, {{-0.5, -s7}, 3}};
        const std::map<std::pair<double, double>, int> petersen_expected{
            {{2.0, 0.0}, 1},  {{1.0, 0.0}, 6},   {{-1.0, 0.0}, 5},  {{0.5, s7}, 5},
            {{0.5, -s7}, 5},  {{-1.0, 1.0}, 4},  {{-1.0, -1.0}, 4}};
        const bool multisets_ok =
            spectrum_multiset(suite[0].entries) == k4_expected &&
            spectrum_multiset(suite[2].entries) == petersen_expected;
        criterion(6, "Ihara-Bass oracle", bass_max <= 1e-8 && multisets_ok,
                  "bass_max=" + fmt(bass_max) +
                      (multisets_ok ? ", multisets exact" : ", multiset MISMATCH"));
    }

    // 7: cylinder-level eigen-check and refinement invariance
    {
        bool all_pass = true;
        double refine_max = 0.0;
        for (const auto& gc : suite) {
            for (const auto& p : gc.pairs)
                if (!check_resonant(gc.g, p.up, 4, 1e-9).pass ||
                    !check_resonant(gc.g, p.um, 4, 1e-9).pass)
                    all_pass = false;
            // refinement of depth-2 cylinders to depth 3 preserves evaluation
            const auto& u = gc.pairs.front().up;
            const auto chains = enumerate_chains(gc.g, 2);
            for (std::size_t k = 0; k < chains.size() && k < 20; ++k) {
                const Cylinder c(gc.g, Orientation::Plus, chains[k]);
                const CylinderFunction coarse = CylinderFunction::indicator(c);
                const CylinderFunction fine = coarse.normalized_to(gc.g, 3);
                const Complex a = u.evaluate(gc.g, coarse);
                const Complex b = u.evaluate(gc.g, fine);
                refine_max = std::max(refine_max,
                                      std::abs(a - b) / std::max(std::abs(a), 1e-12));
            }
        }
        criterion(7, "cylinder eigen-check", all_pass && refine_max <= 1e-12,
                  std::string(all_pass ? "depth-4 checks pass" : "depth-4 check FAILED") +
                      ", refinement_dev=" + fmt(refine_max));
    }

    // 8: tree cover at depth 5 on K4 and Petersen
    {
        bool ok = true;
        std::string detail;
        for (const char* name : {"complete:4", "petersen"}) {
            const RegularGraph g = name == std::string("petersen")
                                       ? RegularGraph::generate_named("petersen")
                                       : RegularGraph::generate_named("complete", 4);
            AnalysisConfig cfg;
            cfg.depth = 5;
            const AnalysisOutcome out = analyze(g, name, cfg);
            const auto& cover_section = out.report.at("cover");
            const double fact = cover_section.at("poisson_factorization_max").get<double>();
            const double rt = cover_section.at("roundtrip_max").get<double>();
            const double adj = cover_section.at("adjacency_relation_max").get<double>();
            const int horo = cover_section.at("horocycle_invariance_max").get<int>();
            ok = ok && fact <= 1e-10 && rt <= 1e-10 && adj <= 1e-9 && horo == 0;
            detail += std::string(name) + ": fact=" + fmt(fact) + " rt=" + fmt(rt) +
                      " adj=" + fmt(adj) + " horo=" + std::to_string(horo) + "; ";

            // unique_path against brute-force chain enumeration, n <= 3
            const TruncatedCover cover = TruncatedCover::unfold(g, 0, 5);
            const BoundaryCylinder w1{cover.frontier().front()};
            BoundaryCylinder w2{-1};
            for (int cf : cover.frontier())
                if (cover.lca(cf, w1.node) == cover.root()) { w2 = {cf}; break; }
            bool path_ok = w2.node > 0;
            for (int x = 0; x < cover.n_nodes() && path_ok; ++x) {
                const int dist = distance_to_geodesic(cover, x, w1, w2);
                for (int n = 0; n <= 3; ++n) {
                    if (dist <= n) {
                        path_ok = path_ok && s_n_contains(cover, x, w1, w2, n);
                        continue;
                    }
                    const std::vector<int> path = unique_path(cover, x, w1, w2, n);
                    std::vector<std::vector<int>> chains;
                    std::vector<int> scratch;
                    collect_chains(cover, x, n + 1, scratch, chains);
                    int admissible = 0;
                    for (const auto& chain : chains)
                        if (cylinder_beyond_edge(cover, chain.back(), w1) &&
                            cylinder_beyond_edge(cover, chain.back(), w2)) {
                            ++admissible;
                            path_ok = path_ok && chain == path;
                        }
                    path_ok = path_ok && admissible == 1;
                }
            }
            ok = ok && path_ok;
            if (!path_ok) detail += "unique_path MISMATCH; ";

            // stability under a deeper truncation
            const TruncatedCover cover6 = TruncatedCover::unfold(g, 0, 6);
            const ResonantState perron{Orientation::Plus, static_cast<double>(g.q()),
                                       std::vector<Complex>(g.n_directed_edges(), 1.0)};
            const auto pt5 =
                poisson_transform(perron.z, cover, measure_from_state(cover, perron));
            const auto pt6 =
                poisson_transform(perron.z, cover6, measure_from_state(cover6, perron));
            bool stable = true;
            for (int x = 0; x < cover.n_nodes(); ++x) {
                stable = stable && cover.depth(x) == cover6.depth(x) &&
                         cover.base_vertex(x) == cover6.base_vertex(x);
                if (!cover.is_frontier(x))
                    stable = stable &&
                             std::abs(pt5[x] - pt6[x]) <= 1e-10 * (1.0 + std::abs(pt5[x]));
            }
            ok = ok && stable;
            if (!stable) detail += "depth stability FAILED; ";
        }
        criterion(8, "tree cover depth 5", ok, detail);
    }

    // 9: closed forms
    {
        bool b_ok = true;
        for (int n = 0; n <= 30; ++n)
            b_ok = b_ok && std::abs(b_integral_closed_form(2.0, 2, n) - Complex(1.5)) <=
                               std::pow(0.5, n) + 1e-14;
        double c_max = 0.0;
        for (const auto& gc : suite)
            for (const auto& p : gc.pairs) {
                if (std::abs(p.z * p.z - Complex(1.0)) <= 1e-8) continue;
                const Complex X = vertex_pairing(gc.g, p.up, p.um);
                const Complex geod = geodesic_pairing_formula(gc.g, p.up, p.um);
                const Complex lhs =
                    static_cast<double>(gc.g.q() + 1) * c_function(1.0 / p.z, gc.g.q()) * X;
                const double scale = (1.0 + std::norm(p.z)) * (gc.g.q() + 1) *
                                     std::max({std::abs(X), std::abs(geod), 1.0});
                c_max = std::max(c_max, std::abs(lhs - geod) / scale);
            }
        criterion(9, "closed forms", b_ok && c_max <= 1e-8,
                  std::string(b_ok ? "b_integral ok" : "b_integral FAILED") +
                      ", c_identity_max=" + fmt(c_max));
    }

    // 10: determinism of the analyze command
    {
        const std::string cli = NBRES_CLI_PATH;
        const std::string args = " analyze --named petersen --depth 3 --seed 11 --out ";
        const int rc_a =
            std::system(("\"" + cli + "\"" + args + "acceptance_run_a.json").c_str());
        const int rc_b =
            std::system(("\"" + cli + "\"" + args + "acceptance_run_b.json").c_str());
        auto slurp = [](const char* path) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        const std::string a = slurp("acceptance_run_a.json");
        const std::string b = slurp("acceptance_run_b.json");
        const bool ok = rc_a == 0 && rc_b == 0 && !a.empty() && a == b;
        criterion(10, "determinism", ok,
                  "bytes=" + std::to_string(a.size()) +
                      (a == b ? ", identical" : ", DIFFER") + ", exit=" +
                      std::to_string(rc_a) + "/" + std::to_string(rc_b));
    }

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
