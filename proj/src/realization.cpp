#include "dcl/realization.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace dcl {

DegreeVector out_degrees(const Orientation& o) {
    DegreeVector d(o.order, 0);
    for (const auto& [tail, head] : o.arcs) {
        if (tail < 1 || tail > o.order || head < 1 || head > o.order)
            throw InputError("arc endpoint out of range");
        ++d[tail - 1];
    }
    return d;
}

DegreeVector leftward_out_degrees(const Graph& g) {
    DegreeVector d(g.order(), 0);
    for (int v = 1; v <= g.order(); ++v)
        for (int w : g.neighbors(v))
            if (w < v) ++d[v - 1];
    return d;
}

DegreeVector rightward_out_degrees(const Graph& g) {
    DegreeVector d(g.order(), 0);
    for (int v = 1; v <= g.order(); ++v)
        for (int w : g.neighbors(v))
            if (w > v) ++d[v - 1];
    return d;
}

int cut_count(const Graph& g, int k) {
    if (k < 1 || k > g.order())
        throw InputError("cut position " + std::to_string(k) + " out of range 1.." +
                         std::to_string(g.order()));
    int count = 0;
    for (const auto& [u, v] : g.edges())
        if (u <= k && v > k) ++count;
    return count;
}

bool dominance_leq(const DegreeVector& s, const DegreeVector& t) {
    if (s.size() != t.size()) throw InputError("dominance comparison needs equal-length vectors");
    long long ps = 0, pt = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        ps += s[i];
        pt += t[i];
        if (ps > pt) return false;
    }
    return ps == pt;
}

bool is_feasible_vector(const Graph& g, const DegreeVector& s) {
    if (static_cast<int>(s.size()) != g.order())
        throw InputError("vector length does not match graph order");
    for (int v = 1; v <= g.order(); ++v)
        if (s[v - 1] < 0 || s[v - 1] > g.degree(v)) return false;
    return dominance_leq(leftward_out_degrees(g), s) && dominance_leq(s, rightward_out_degrees(g));
}

void for_each_feasible_vector(const Graph& g, std::int64_t cap,
                              const std::function<bool(const DegreeVector&)>& fn) {
    const int n = g.order();
    const int m = g.size();
    DegreeVector lo_vec = leftward_out_degrees(g);
    DegreeVector hi_vec = rightward_out_degrees(g);
    // prefix windows and the degree mass still available after position k
    std::vector<long long> lo_prefix(n + 1, 0), hi_prefix(n + 1, 0), deg_suffix(n + 2, 0);
    for (int k = 1; k <= n; ++k) {
        lo_prefix[k] = lo_prefix[k - 1] + lo_vec[k - 1];
        hi_prefix[k] = hi_prefix[k - 1] + hi_vec[k - 1];
    }
    for (int k = n; k >= 1; --k) deg_suffix[k] = deg_suffix[k + 1] + g.degree(k);

    if (n == 0) {
        if (cap < 1) throw EnumerationLimitError("feasible vector cap exceeded");
        fn(DegreeVector{});
        return;
    }

    DegreeVector s(n, 0);
    std::vector<int> hi_at(n + 1, 0);
    std::int64_t emitted = 0;
    long long prefix = 0;  // sum of s[0..k-2] while working on position k
    int k = 1;
    bool descending = true;
    while (k >= 1) {
        if (descending) {
            // smallest admissible value at position k
            long long lo = std::max<long long>(0, lo_prefix[k] - prefix);
            lo = std::max(lo, static_cast<long long>(m) - prefix - deg_suffix[k + 1]);
            long long hi = std::min<long long>(g.degree(k), hi_prefix[k] - prefix);
            if (lo > hi) {
                descending = false;  // dead branch, back up
                --k;
                if (k >= 1) prefix -= s[k - 1];
                continue;
            }
            s[k - 1] = static_cast<int>(lo);
            hi_at[k] = static_cast<int>(hi);
        } else {
            if (s[k - 1] >= hi_at[k]) {
                --k;
                if (k >= 1) prefix -= s[k - 1];
                continue;
            }
            ++s[k - 1];
            descending = true;
        }
        if (k == n) {
            if (++emitted > cap) throw EnumerationLimitError("feasible vector cap exceeded");
            if (!fn(s)) return;
            descending = false;
            continue;
        }
        prefix += s[k - 1];
        ++k;
    }
}

std::vector<DegreeVector> enumerate_feasible_vectors(const Graph& g, std::int64_t cap) {
    std::vector<DegreeVector> out;
    for_each_feasible_vector(g, cap, [&](const DegreeVector& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::optional<Orientation> realize(const Graph& g, const DegreeVector& s) {
    const int n = g.order();
    const int m = g.size();
    if (static_cast<int>(s.size()) != n)
        throw InputError("vector length does not match graph order");
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        if (s[v] < 0) return std::nullopt;
        total += s[v];
    }
    if (total != m) return std::nullopt;

    // One tail per edge, at most s[v] tails at v: a matching problem solved
    // edge by edge with breadth-first augmenting chains of tail flips.
    std::vector<int> spare(n + 1);
    for (int v = 1; v <= n; ++v) spare[v] = s[v - 1];
    std::vector<int> tail(m, 0);
    std::vector<std::vector<int>> incident(n + 1);
    for (int e = 0; e < m; ++e) {
        incident[g.edges()[e].first].push_back(e);
        incident[g.edges()[e].second].push_back(e);
    }

    std::vector<int> parent_edge(n + 1);
    std::vector<bool> seen(n + 1);
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = g.edges()[e];
        if (spare[u] > 0) {
            --spare[u];
            tail[e] = u;
            continue;
        }
        if (spare[v] > 0) {
            --spare[v];
            tail[e] = v;
            continue;
        }
        // free up u or v by re-tailing already placed edges
        std::fill(seen.begin(), seen.end(), false);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::queue<int> frontier;
        seen[u] = true;
        frontier.push(u);
        if (!seen[v]) {
            seen[v] = true;
            frontier.push(v);
        }
        int found = 0;
        while (!frontier.empty() && found == 0) {
            int x = frontier.front();
            frontier.pop();
            for (int e2 : incident[x]) {
                if (tail[e2] != x) continue;
                int y = g.edges()[e2].first == x ? g.edges()[e2].second : g.edges()[e2].first;
                if (seen[y]) continue;
                seen[y] = true;
                parent_edge[y] = e2;
                if (spare[y] > 0) {
                    found = y;
                    break;
                }
                frontier.push(y);
            }
        }
        if (found == 0) return std::nullopt;
        --spare[found];
        int y = found;
        while (parent_edge[y] >= 0) {
            int e2 = parent_edge[y];
            int x = g.edges()[e2].first == y ? g.edges()[e2].second : g.edges()[e2].first;
            tail[e2] = y;  // flip toward y, freeing x
            y = x;
        }
        tail[e] = y;  // y is u or v, just freed
    }

    Orientation o;
    o.order = n;
    o.arcs.reserve(m);
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = g.edges()[e];
        o.arcs.emplace_back(tail[e], tail[e] == u ? v : u);
    }
    return o;
}

void for_each_orientation(const Graph& g, int max_edges,
                          const std::function<bool(const Orientation&)>& fn) {
    const int m = g.size();
    if (m > max_edges || m >= 63)
        throw EnumerationLimitError("orientation enumeration over " + std::to_string(m) +
                                    " edges exceeds the cap of " +
                                    std::to_string(std::min(max_edges, 62)));
    Orientation o;
    o.order = g.order();
    o.arcs.resize(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (int e = 0; e < m; ++e) {
            const auto& [u, v] = g.edges()[e];
            o.arcs[e] = (mask >> e) & 1 ? Edge{v, u} : Edge{u, v};
        }
        if (!fn(o)) return;
    }
}

std::vector<Orientation> enumerate_orientations(const Graph& g, int max_edges) {
    std::vector<Orientation> out;
    for_each_orientation(g, max_edges, [&](const Orientation& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

OracleResult is_degree_complete_oracle(const Graph& g, std::int64_t max_vectors) {
    OracleResult result;
    result.degree_complete = true;
    for_each_feasible_vector(g, max_vectors, [&](const DegreeVector& s) {
        if (!realize(g, s)) {
            result.degree_complete = false;
            result.counterexample = s;
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace dcl
