#include "dcl/forbidden.hpp"

#include <vector>

namespace dcl {

std::string witness_kind_name(WitnessKind kind) {
    return kind == WitnessKind::crossing ? "H1" : "H2";
}

// Every crossing or nested pair can be written as an outer edge {a,b} plus a
// second edge {c,d} (c < d) whose smaller endpoint lies strictly inside
// (a,b) and whose larger endpoint differs from b. Sweeping c upward while
// keeping a count of edges currently spanning c (and, per vertex d, of
// spanning edges that end exactly at d) decides existence in O(n + m).
bool has_forbidden_configuration(const LabeledGraph& g) {
    const int n = g.order();
    std::vector<int> ending_at(n + 2, 0);
    long long open = 0;  // edges {a,b} with a < c < b for the current c
    for (int c = 1; c <= n; ++c) {
        for (int d : g.neighbors(c)) {
            if (d <= c) continue;
            if (open - ending_at[d] > 0) return true;
        }
        for (int d : g.neighbors(c)) {
            if (d <= c) continue;
            ++open;
            ++ending_at[d];
        }
        if (c + 1 <= n) open -= ending_at[c + 1];
    }
    return false;
}

bool is_degree_complete(const LabeledGraph& g) { return !has_forbidden_configuration(g); }

std::optional<LabeledWitness> find_forbidden_configuration(const LabeledGraph& g) {
    if (!has_forbidden_configuration(g)) return std::nullopt;

    // A witness exists; scan edge pairs for the lexicographically smallest
    // label tuple. Edges are sorted (a,b)-ascending, which supports pruning:
    // once k1 is fixed no later outer edge with a larger a can win, and for a
    // fixed outer edge no inner edge with c >= b (or c past the best k2) can.
    const auto& es = g.edges();
    const int m = g.size();
    std::optional<LabeledWitness> best;
    for (int i = 0; i < m; ++i) {
        const auto& [a, b] = es[i];
        if (best && a > best->labels[0]) break;
        for (int j = 0; j < m; ++j) {
            const auto& [c, d] = es[j];
            if (c <= a) continue;
            if (c >= b) break;
            if (d == b) continue;
            LabeledWitness w;
            if (d > b) {
                w.kind = WitnessKind::crossing;
                w.labels = {a, c, b, d};
            } else {
                w.kind = WitnessKind::nested;
                w.labels = {a, c, d, b};
            }
            w.edges = {es[i], es[j]};
            if (!best || w.labels < best->labels) best = w;
            if (a == best->labels[0] && c > best->labels[1]) break;
        }
    }
    if (!best) throw InternalError("witness sweep and scan disagree");
    return best;
}

}  // namespace dcl
