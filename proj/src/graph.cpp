#include "nbres/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace nbres {

namespace {

bool connected(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : pairs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int count = 1;
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                bfs.push(y);
            }
    }
    return count == n;
}

} // namespace

void RegularGraph::build_adjacency() {
    const int m2 = static_cast<int>(edges_.size());
    out_edges_.assign(n_, {});
    for (int e = 0; e < m2; ++e) out_edges_[edges_[e].first].push_back(e);
    for (auto& v : out_edges_) std::sort(v.begin(), v.end());
    successors_.assign(m2, {});
    predecessors_.assign(m2, {});
    for (int e = 0; e < m2; ++e) {
        for (int f : out_edges_[edges_[e].second])
            if (f != op(e)) successors_[e].push_back(f);
        for (int f : successors_[e]) predecessors_[f].push_back(e);
    }
    for (auto& v : predecessors_) std::sort(v.begin(), v.end());
}

RegularGraph RegularGraph::build_from_undirected_edges(
    int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 0) throw ParamOutOfRangeError("vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    std::vector<int> deg(n, 0);
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParamOutOfRangeError("vertex index out of range");
        if (u == v) throw HasLoopError("loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw HasMultiEdgeError("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
        ++deg[u];
        ++deg[v];
    }
    for (int x = 0; x < n; ++x)
        if (deg[x] != deg[0])
            throw NotRegularError("vertex " + std::to_string(x) + " has degree " +
                                  std::to_string(deg[x]) + " != " + std::to_string(deg[0]));
    if (deg[0] < 2) throw NotRegularError("degree must be at least 2");
    if (!connected(n, pairs)) throw DisconnectedError("graph is not connected");

    RegularGraph g;
    g.n_ = n;
    g.q_ = deg[0] - 1;
    g.edges_.reserve(2 * pairs.size());
    // writer emits sorted edges; sorting here keeps indices stable across round-trips
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(pairs.size());
    for (auto [u, v] : pairs) sorted.push_back(std::minmax(u, v));
    std::sort(sorted.begin(), sorted.end());
    for (auto [u, v] : sorted) {
        g.edges_.emplace_back(u, v);
        g.edges_.emplace_back(v, u);
    }
    g.build_adjacency();
    return g;
}

RegularGraph RegularGraph::generate_named(const std::string& name, int param) {
    std::vector<std::pair<int, int>> pairs;
    if (name == "complete") {
        if (param < 3) throw ParamOutOfRangeError("complete(n) needs n >= 3");
        for (int u = 0; u < param; ++u)
            for (int v = u + 1; v < param; ++v) pairs.emplace_back(u, v);
        return build_from_undirected_edges(param, pairs);
    }
    if (name == "cycle") {
        if (param < 3) throw ParamOutOfRangeError("cycle(n) needs n >= 3");
        for (int u = 0; u < param; ++u) pairs.emplace_back(u, (u + 1) % param);
        return build_from_undirected_edges(param, pairs);
    }
    if (name == "complete_bipartite") {
        if (param < 2) throw ParamOutOfRangeError("complete_bipartite(n) needs n >= 2");
        for (int u = 0; u < param; ++u)
            for (int v = 0; v < param; ++v) pairs.emplace_back(u, param + v);
        return build_from_undirected_edges(2 * param, pairs);
    }
    if (name == "petersen") {
        for (int i = 0; i < 5; ++i) {
            pairs.emplace_back(i, (i + 1) % 5);     // outer cycle
            pairs.emplace_back(i, 5 + i);           // spokes
            pairs.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        }
        return build_from_undirected_edges(10, pairs);
    }
    if (name == "hypercube3") {
        for (int u = 0; u < 8; ++u)
            for (int bit = 0; bit < 3; ++bit) {
                int v = u ^ (1 << bit);
                if (u < v) pairs.emplace_back(u, v);
            }
        return build_from_undirected_edges(8, pairs);
    }
    throw UnknownNameError("unknown graph name: " + name);
}

RegularGraph RegularGraph::generate_random_regular(int n, int degree, std::uint64_t seed,
                                                   int rejection_budget) {
    if (degree < 2) throw ParamOutOfRangeError("degree must be >= 2");
    if (degree >= n) throw ParamOutOfRangeError("degree must be < n");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw ParityViolationError("n*degree must be even");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * degree);
    for (int x = 0; x < n; ++x)
        for (int k = 0; k < degree; ++k) stubs[static_cast<std::size_t>(x) * degree + k] = x;

    for (int attempt = 0; attempt < rejection_budget; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(stubs.size() / 2);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) { ok = false; break; }
            pairs.emplace_back(u, v);
        }
        if (!ok || !connected(n, pairs)) continue;
        return build_from_undirected_edges(n, pairs);
    }
    throw GenerationTimeoutError("configuration model rejection budget exceeded");
}

RegularGraph RegularGraph::parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                if (ls.eof() && line.find_first_not_of(" \t\r") == std::string::npos)
                    { n = -1; continue; } // blank/comment line before header
                throw FormatError("expected header line \"n m\"");
            }
            if (n <= 0 || m < 0) throw FormatError("invalid header values");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw FormatError("edge line needs two vertex indices");
        std::string extra;
        if (ls >> extra) throw FormatError("trailing tokens on edge line");
        pairs.emplace_back(u, v);
    }
    if (n < 0) throw FormatError("missing header line");
    if (static_cast<int>(pairs.size()) != m)
        throw FormatError("header announced " + std::to_string(m) + " edges, found " +
                          std::to_string(pairs.size()));
    return build_from_undirected_edges(n, pairs);
}

RegularGraph RegularGraph::read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string RegularGraph::format_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << n_undirected_edges() << '\n';
    std::vector<std::pair<int, int>> und;
    for (int e = 0; e < n_directed_edges(); e += 2) und.push_back(edges_[e]);
    std::sort(und.begin(), und.end());
    for (auto [u, v] : und) out << u << ' ' << v << '\n';
    return out.str();
}

void RegularGraph::write_edge_list(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << format_edge_list();
}

} // namespace nbres
