#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "nbres/report.hpp"

namespace {

using namespace nbres;

// exit codes: 0 all checks pass, 1 check failure, 2 io, 3 format,
// 4 graph construction, 5 numerics, 6 usage
constexpr int kExitCheckFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;
constexpr int kExitGraph = 4;
constexpr int kExitNumeric = 5;
constexpr int kExitUsage = 6;

RegularGraph graph_from_spec(const std::string& named, const std::string& input) {
    if (!named.empty()) {
        const auto colon = named.find(':');
        if (colon == std::string::npos) return RegularGraph::generate_named(named);
        return RegularGraph::generate_named(named.substr(0, colon),
                                            std::stoi(named.substr(colon + 1)));
    }
    if (!input.empty()) return RegularGraph::read_edge_list(input);
    throw UnknownNameError("one of --named or --input is required");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot open " + out_path + " for writing");
    out << text;
}

double theorem_residual_max(const Json& report) {
    double worst = 0.0;
    for (const auto& row : report.at("theorem"))
        worst = std::max(worst, row.at("theorem_residual").get<double>());
    return worst;
}

double decomposition_residual_max(const Json& report) {
    double worst = 0.0;
    for (const auto& row : report.at("theorem"))
        for (const auto& d : row.at("decomposition_rows"))
            worst = std::max(worst, d.at("sum_residual").get<double>());
    return worst;
}

int run_analyze(const std::string& named, const std::string& input,
                const AnalysisConfig& cfg, const std::string& format,
                const std::string& out_path) {
    const RegularGraph g = graph_from_spec(named, input);
    const std::string source = !named.empty() ? named : input;
    const AnalysisOutcome outcome = analyze(g, source, cfg);
    if (format == "csv")
        write_output(resonances_csv(outcome.report) + "\n" + theorem_csv(outcome.report),
                     out_path);
    else
        write_output(dump_canonical(outcome.report), out_path);
    return outcome.pass ? 0 : kExitCheckFailure;
}

int run_verify(const AnalysisConfig& cfg, int seed_count, int n, int degree) {
    std::vector<std::pair<std::string, RegularGraph>> suite;
    for (const std::string& name :
         {std::string("complete:4"), std::string("complete:5"), std::string("petersen"),
          std::string("complete_bipartite:3"), std::string("hypercube3")})
        suite.emplace_back(name, graph_from_spec(name, ""));
    for (int s = 0; s < seed_count; ++s)
        suite.emplace_back("random(n=" + std::to_string(n) + ",d=" + std::to_string(degree) +
                               ",seed=" + std::to_string(s) + ")",
                           RegularGraph::generate_random_regular(n, degree, s));

    bool all_pass = true;
    std::printf("%-32s %-28s %-14s %s\n", "graph", "check", "max_residual", "status");
    auto row = [&](const std::string& graph, const std::string& check, double value,
                   double threshold) {
        const bool ok = value <= threshold;
        all_pass = all_pass && ok;
        std::printf("%-32s %-28s %-14.3e %s\n", graph.c_str(), check.c_str(), value,
                    ok ? "PASS" : "FAIL");
    };
    for (const auto& [name, g] : suite) {
        const AnalysisOutcome outcome = analyze(g, name, cfg);
        const Json& r = outcome.report;
        row(name, "theorem", theorem_residual_max(r), cfg.tol);
        row(name, "decomposition", decomposition_residual_max(r), cfg.tol);
        row(name, "bass", r.at("oracle").at("bass_residual_max").get<double>(), cfg.tol);
        row(name, "geodesic_direct_vs_formula",
            r.at("oracle").at("direct_vs_formula_geodesic_max").get<double>(), cfg.tol * 1e-2);
        row(name, "p2_vs_vertex", r.at("oracle").at("p2_vs_vertex_max").get<double>(),
            cfg.tol * 1e-2);
        row(name, "orthogonality", r.at("oracle").at("orthogonality_max").get<double>(),
            cfg.tol);
        if (cfg.depth > 0) {
            row(name, "poisson_factorization",
                r.at("cover").at("poisson_factorization_max").get<double>(), cfg.tol * 1e-2);
            row(name, "poisson_roundtrip", r.at("cover").at("roundtrip_max").get<double>(),
                cfg.tol * 1e-2);
            row(name, "adjacency_relation",
                r.at("cover").at("adjacency_relation_max").get<double>(), cfg.tol * 1e-1);
            row(name, "horocycle_invariance",
                r.at("cover").at("horocycle_invariance_max").get<double>(), 0.0);
        }
    }
    return all_pass ? 0 : kExitCheckFailure;
}

int run_zeta(const std::string& named, const std::string& input, int samples,
             std::uint64_t seed, double tol) {
    const RegularGraph g = graph_from_spec(named, input);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 0.3), angle(0.0, 2.0 * M_PI);
    bool all_pass = true;
    std::printf("%-24s %-24s %-14s %s\n", "u_re", "u_im", "residual", "status");
    auto row = [&](Complex u) {
        const double res = bass_check_relative(g, u);
        const bool ok = res <= tol;
        all_pass = all_pass && ok;
        std::printf("%-24.17g %-24.17g %-14.3e %s\n", u.real(), u.imag(), res,
                    ok ? "PASS" : "FAIL");
    };
    row(Complex(0.0, 0.0));
    for (int k = 0; k < samples; ++k) row(std::polar(radius(rng), angle(rng)));
    return all_pass ? 0 : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-backtracking resonances and pairing-formula verification"};
    app.require_subcommand(1);

    std::string named, input, format = "json", out_path;
    AnalysisConfig cfg;
    int seed_count = 20, rand_n = 12, rand_degree = 3;
    std::uint64_t gen_seed = 0;
    int gen_n = 0, gen_degree = 0, zeta_samples = 20;

    auto* analyze_cmd = app.add_subcommand("analyze", "full verification run on one graph");
    analyze_cmd->add_option("--named", named, "named graph, e.g. petersen or complete:4");
    analyze_cmd->add_option("--input", input, "edge-list file");
    analyze_cmd->add_option("--tol", cfg.tol, "residual tolerance");
    analyze_cmd->add_option("--nmax", cfg.n_max, "max cutoff level in the decomposition");
    analyze_cmd->add_option("--depth", cfg.depth, "tree-cover depth, 0 skips cover checks");
    analyze_cmd->add_option("--seed", cfg.seed, "seed for eigenspace sampling");
    analyze_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "acceptance sweep over a graph suite");
    verify_cmd->add_option("--tol", cfg.tol, "residual tolerance");
    verify_cmd->add_option("--nmax", cfg.n_max, "max cutoff level");
    verify_cmd->add_option("--depth", cfg.depth, "tree-cover depth, 0 skips cover checks");
    verify_cmd->add_option("--seed", cfg.seed, "sampling seed");
    verify_cmd->add_option("--seed-count", seed_count, "number of random regular graphs");
    verify_cmd->add_option("--n", rand_n, "vertex count of random graphs");
    verify_cmd->add_option("--degree", rand_degree, "degree of random graphs");

    auto* generate_cmd = app.add_subcommand("generate", "write a random regular graph");
    generate_cmd->add_option("n", gen_n, "vertex count")->required();
    generate_cmd->add_option("degree", gen_degree, "degree")->required();
    generate_cmd->add_option("seed", gen_seed, "seed")->required();
    generate_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* zeta_cmd = app.add_subcommand("zeta", "Ihara–Bass identity residual table");
    zeta_cmd->add_option("--named", named, "named graph");
    zeta_cmd->add_option("--input", input, "edge-list file");
    zeta_cmd->add_option("--samples", zeta_samples, "number of sampled u values");
    zeta_cmd->add_option("--seed", cfg.seed, "sampling seed");
    zeta_cmd->add_option("--tol", cfg.tol, "residual tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_analyze(named, input, cfg, format, out_path);
        if (verify_cmd->parsed()) return run_verify(cfg, seed_count, rand_n, rand_degree);
        if (generate_cmd->parsed()) {
            const RegularGraph g =
                RegularGraph::generate_random_regular(gen_n, gen_degree, gen_seed);
            write_output(g.format_edge_list(), out_path);
            return 0;
        }
        if (zeta_cmd->parsed())
            return run_zeta(named, input, zeta_samples, cfg.seed, cfg.tol);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const NotRegularError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const HasLoopError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const HasMultiEdgeError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const DisconnectedError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const UnknownNameError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParamOutOfRangeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParityViolationError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const GenerationTimeoutError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
