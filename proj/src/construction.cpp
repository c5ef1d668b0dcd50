#include "dcl/construction.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>

namespace dcl {

InsertionState::InsertionState(int order)
    : order_(order), present_(order + 1, 0), where_(order + 1) {
    if (order < 0) throw InternalError("negative order");
}

void InsertionState::append(int v) {
    if (v < 1 || v > order_) throw InternalError("vertex out of range");
    if (present_[v]) throw InternalError("vertex " + std::to_string(v) + " already labeled");
    where_[v] = sequence_.insert(sequence_.end(), v);
    present_[v] = 1;
    ++labeled_;
}

void InsertionState::insert_after(int x, int u) {
    if (x < 1 || x > order_ || u < 1 || u > order_) throw InternalError("vertex out of range");
    if (present_[x]) throw InternalError("vertex " + std::to_string(x) + " already labeled");
    if (!present_[u]) throw InternalError("vertex " + std::to_string(u) + " not labeled yet");
    where_[x] = sequence_.insert(std::next(where_[u]), x);
    present_[x] = 1;
    ++labeled_;
}

bool InsertionState::is_labeled(int v) const {
    return v >= 1 && v <= order_ && present_[v];
}

int InsertionState::labeled_count() const { return labeled_; }

std::vector<int> InsertionState::sequence() const {
    return {sequence_.begin(), sequence_.end()};
}

Labeling InsertionState::to_labeling() const {
    if (labeled_ != order_) throw InternalError("labeling incomplete");
    std::vector<int> label_of(order_ + 1, 0);
    int next = 0;
    for (int v : sequence_) label_of[v] = ++next;
    return Labeling(std::move(label_of));
}

Labeling build_labeling(const Graph& g, const Decomposition& dec) {
    const int n = g.order();
    const auto comps = components(g);
    std::vector<int> comp_of(n + 1, -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i]) comp_of[v] = static_cast<int>(i);

    std::vector<std::vector<const std::vector<int>*>> comp_paths(comps.size());
    for (const auto& p : dec.paths) {
        if (p.empty()) throw InternalError("empty residual path");
        comp_paths[comp_of[p.front()]].push_back(&p);
    }

    InsertionState state(n);
    std::vector<int> path_pos(n + 1, -1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& comp = comps[i];
        if (comp.size() <= 2) {
            for (int v : comp) state.append(v);
            continue;
        }
        if (comp_paths[i].size() != 1)
            throw InternalError("component residual is not a single path");
        const auto& path = *comp_paths[i][0];
        for (std::size_t k = 0; k < path.size(); ++k) {
            state.append(path[k]);
            path_pos[path[k]] = static_cast<int>(k);
        }

        if (dec.route == Route::apexes) {
            for (int v : dec.apex_set) {
                if (comp_of[v] != static_cast<int>(i)) continue;
                if (g.degree(v) != 2) throw InternalError("apex without two neighbors");
                int u = g.neighbors(v)[0], w = g.neighbors(v)[1];
                if (path_pos[u] < 0 || path_pos[w] < 0 ||
                    std::abs(path_pos[u] - path_pos[w]) != 1)
                    throw InternalError("apex neighbors are not consecutive on the path");
                state.insert_after(v, path_pos[u] < path_pos[w] ? u : w);
            }
        }

        for (auto it = dec.leaf_set.rbegin(); it != dec.leaf_set.rend(); ++it) {
            const int x = *it;
            if (comp_of[x] != static_cast<int>(i)) continue;
            if (g.degree(x) != 1) throw InternalError("leaf without unique neighbor");
            const int u = g.neighbors(x)[0];
            if (!state.is_labeled(u)) throw InternalError("leaf neighbor not labeled yet");
            state.insert_after(x, u);
        }

        for (int v : path) path_pos[v] = -1;
    }
    return state.to_labeling();
}

LabelingResult label_graph(const Graph& g, Route route) {
    LabelingResult result;
    auto dec = route == Route::apexes ? decompose_via_apexes(g) : decompose_via_break_edges(g);
    if (!dec) {
        auto w = find_obstruction(g);
        if (!w) throw InternalError("no residual path decomposition, yet no obstruction found");
        result.obstruction = std::move(w);
        return result;
    }
    result.labeling = build_labeling(g, *dec);
    return result;
}

Labeling label_caterpillar(const Graph& g) {
    if (components(g).size() > 1) throw InputError("not a caterpillar: graph is disconnected");
    if (g.size() != std::max(0, g.order() - 1))
        throw InputError("not a caterpillar: graph contains a cycle");
    auto dec = decompose_via_apexes(g);
    if (!dec) {
        std::string detail = "leaf removal does not leave a path";
        if (auto w = find_obstruction(g)) {
            detail = obstruction_kind_name(w->kind) + " on vertices";
            for (int v : w->vertices) detail += " " + std::to_string(v);
        }
        throw InputError("not a caterpillar: " + detail);
    }
    return build_labeling(g, *dec);
}

}  // namespace dcl
