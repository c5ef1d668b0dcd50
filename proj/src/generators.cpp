#include "dcl/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace dcl {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InputError(message);
}

// Modulo draws keep outputs identical across standard libraries; the slight
// bias is irrelevant for test corpora.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

std::vector<int> shuffled_identity(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    for (int i = n; i >= 2; --i) std::swap(perm[i], perm[1 + draw(rng, i)]);
    return perm;
}

}  // namespace

Graph make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    require(n >= 1, "star needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 2; i <= n; ++i) edges.push_back({1, i});
    return Graph(n, std::move(edges));
}

Graph make_spider() {
    return Graph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
}

Graph make_net() {
    return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Graph make_triangle_chain(int k) {
    require(k >= 1, "triangle chain needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const int a = 3 * i + 1;
        edges.push_back({a, a + 1});
        edges.push_back({a, a + 2});
        edges.push_back({a + 1, a + 2});
        if (i + 1 < k) edges.push_back({a + 2, a + 3});
    }
    return Graph(3 * k, std::move(edges));
}

Graph make_caterpillar(int n, std::uint64_t seed) {
    require(n >= 1, "caterpillar needs n >= 1");
    if (n <= 2) return make_path(n);
    std::mt19937_64 rng(seed);
    const int spine = 1 + static_cast<int>(draw(rng, n));
    std::vector<Edge> edges;
    for (int i = 1; i < spine; ++i) edges.push_back({i, i + 1});
    for (int v = spine + 1; v <= n; ++v)
        edges.push_back(make_edge(1 + static_cast<int>(draw(rng, spine)), v));
    return Graph(n, std::move(edges));
}

Graph make_gnm(int n, int m, std::uint64_t seed) {
    require(n >= 1, "graph needs n >= 1");
    require(m >= 0, "edge count must be nonnegative");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    require(m <= max_edges, "more edges than a simple graph allows");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    if (2LL * m > max_edges) {
        // dense request: pick m survivors of a partial shuffle of all pairs
        std::vector<Edge> all;
        all.reserve(max_edges);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
        for (int i = 0; i < m; ++i)
            std::swap(all[i], all[i + draw(rng, all.size() - i)]);
        edges.assign(all.begin(), all.begin() + m);
    } else {
        std::set<Edge> picked;
        while (static_cast<int>(picked.size()) < m) {
            int u = 1 + static_cast<int>(draw(rng, n));
            int v = 1 + static_cast<int>(draw(rng, n));
            if (u != v) picked.insert(make_edge(u, v));
        }
        edges.assign(picked.begin(), picked.end());
    }
    return Graph(n, std::move(edges));
}

Graph make_labelable(int n, std::uint64_t seed) {
    require(n >= 1, "graph needs n >= 1");
    if (n <= 2) return make_path(n);
    std::mt19937_64 rng(seed);
    const int spine = 1 + static_cast<int>(draw(rng, n - 1));  // keep >= 1 extra vertex
    const int extras = n - spine;
    const int max_apexes = std::min(spine - 1, extras);
    const int apexes = max_apexes > 0 ? static_cast<int>(draw(rng, max_apexes + 1)) : 0;

    std::vector<Edge> edges;
    for (int i = 1; i < spine; ++i) edges.push_back({i, i + 1});

    // one apex per chosen spine edge, so no edge lies in two triangles
    std::vector<int> spine_edges(spine - 1);
    for (int i = 0; i < spine - 1; ++i) spine_edges[i] = i + 1;  // edge (i+1, i+2)
    for (int i = 0; i < apexes; ++i)
        std::swap(spine_edges[i], spine_edges[i + draw(rng, spine_edges.size() - i)]);
    int next_id = spine + 1;
    for (int i = 0; i < apexes; ++i, ++next_id) {
        edges.push_back({spine_edges[i], next_id});
        edges.push_back({spine_edges[i] + 1, next_id});
    }
    for (; next_id <= n; ++next_id)
        edges.push_back(make_edge(1 + static_cast<int>(draw(rng, spine)), next_id));

    const auto perm = shuffled_identity(n, rng);
    for (auto& [u, v] : edges) {
        int pu = perm[u], pv = perm[v];
        u = std::min(pu, pv);
        v = std::max(pu, pv);
    }
    return Graph(n, std::move(edges));
}

}  // namespace dcl
