#include "dcl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dcl {

Edge make_edge(int u, int v) {
    if (u == v) throw InputError("loop edge " + std::to_string(u) + "-" + std::to_string(v));
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int order, std::vector<Edge> edges) : n_(order) {
    if (order < 0) throw InputError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n_)
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " out of range 1.." + std::to_string(n_));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InputError("duplicate edge " + std::to_string(dup->first) + "-" +
                         std::to_string(dup->second));
    edges_ = std::move(edges);
    adj_.assign(n_ + 1, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::require_vertex(int v) const {
    if (!has_vertex(v))
        throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

const std::vector<int>& Graph::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    require_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(list.begin(), list.end(), target);
}

Labeling::Labeling(std::vector<int> label_of_vertex) {
    if (label_of_vertex.empty())
        throw InputError("labeling array must have slot 0 plus one entry per vertex");
    n_ = static_cast<int>(label_of_vertex.size()) - 1;
    label_of_ = std::move(label_of_vertex);
    std::vector<bool> seen(n_ + 1, false);
    for (int v = 1; v <= n_; ++v) {
        int l = label_of_[v];
        if (l < 1 || l > n_)
            throw InputError("label " + std::to_string(l) + " of vertex " + std::to_string(v) +
                             " out of range 1.." + std::to_string(n_));
        if (seen[l]) throw InputError("label " + std::to_string(l) + " used twice");
        seen[l] = true;
    }
}

Labeling Labeling::identity(int n) {
    std::vector<int> lab(n + 1);
    for (int v = 1; v <= n; ++v) lab[v] = v;
    return Labeling(std::move(lab));
}

int Labeling::operator()(int v) const {
    if (v < 1 || v > n_)
        throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    return label_of_[v];
}

std::vector<int> Labeling::vertices_by_label() const {
    std::vector<int> by_label(n_);
    for (int v = 1; v <= n_; ++v) by_label[label_of_[v] - 1] = v;
    return by_label;
}

LabeledGraph apply_labeling(const Graph& g, const Labeling& f) {
    if (f.size() != g.order()) throw InputError("labeling size does not match graph order");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& [u, v] : g.edges()) edges.push_back(make_edge(f(u), f(v)));
    return Graph(g.order(), std::move(edges));
}

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.order() + 1, false);
    for (int v : removed) {
        if (!g.has_vertex(v))
            throw InputError("cannot remove unknown vertex " + std::to_string(v));
        gone[v] = true;
    }
    InducedSubgraph out;
    out.to_new.assign(g.order() + 1, 0);
    out.to_original.push_back(0);
    for (int v = 1; v <= g.order(); ++v) {
        if (gone[v]) continue;
        out.to_original.push_back(v);
        out.to_new[v] = static_cast<int>(out.to_original.size()) - 1;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.emplace_back(out.to_new[u], out.to_new[v]);
    out.graph = Graph(static_cast<int>(out.to_original.size()) - 1, std::move(edges));
    return out;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& removed) {
    std::vector<Edge> gone;
    gone.reserve(removed.size());
    for (const auto& [u, v] : removed) {
        if (!g.has_edge(u, v))
            throw InputError("cannot remove absent edge " + std::to_string(u) + "-" +
                             std::to_string(v));
        gone.push_back(make_edge(u, v));
    }
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    std::vector<Edge> kept;
    kept.reserve(g.size() - gone.size());
    for (const auto& e : g.edges())
        if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
    return Graph(g.order(), std::move(kept));
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> parts;
    std::vector<bool> visited(g.order() + 1, false);
    std::vector<int> stack;
    for (int start = 1; start <= g.order(); ++start) {
        if (visited[start]) continue;
        std::vector<int> part;
        visited[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (int w : g.neighbors(v))
                if (!visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

std::optional<std::vector<std::vector<int>>> path_decomposition(const Graph& g) {
    for (int v = 1; v <= g.order(); ++v)
        if (g.degree(v) > 2) return std::nullopt;
    std::vector<std::vector<int>> paths;
    std::vector<bool> visited(g.order() + 1, false);
    for (int start = 1; start <= g.order(); ++start) {
        if (visited[start] || g.degree(start) > 1) continue;
        // walk from a degree-<=1 endpoint; lowest id first by scan order
        std::vector<int> seq;
        int prev = 0, cur = start;
        while (true) {
            visited[cur] = true;
            seq.push_back(cur);
            int next = 0;
            for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            if (next == 0) break;
            prev = cur;
            cur = next;
        }
        paths.push_back(std::move(seq));
    }
    // any unvisited vertex now sits on a cycle of degree-2 vertices
    for (int v = 1; v <= g.order(); ++v)
        if (!visited[v]) return std::nullopt;
    return paths;
}

namespace {

int parse_int_field(const std::string& token, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw InputError("line " + std::to_string(line_no) + ": bad " + what + " '" + token + "'");
    return value;
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1, m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'n m' header");
        n = parse_int_field(toks[0], line_no, "vertex count");
        m = parse_int_field(toks[1], line_no, "edge count");
        break;
    }
    if (n < 0) throw InputError("empty input: missing 'n m' header");
    if (m < 0) throw InputError("line " + std::to_string(line_no) + ": negative edge count");

    std::vector<Edge> edges;
    edges.reserve(m);
    while (static_cast<int>(edges.size()) < m) {
        if (!std::getline(in, line))
            throw InputError("unexpected end of input: got " + std::to_string(edges.size()) +
                             " of " + std::to_string(m) + " edges");
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
        int u = parse_int_field(toks[0], line_no, "vertex id");
        int v = parse_int_field(toks[1], line_no, "vertex id");
        if (u == v) throw InputError("line " + std::to_string(line_no) + ": loop edge " +
                                     std::to_string(u) + "-" + std::to_string(v));
        if (u < 1 || u > n || v < 1 || v > n)
            throw InputError("line " + std::to_string(line_no) + ": vertex out of range 1.." +
                             std::to_string(n));
        edges.push_back(make_edge(u, v));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!tokens_of(line).empty())
            throw InputError("line " + std::to_string(line_no) + ": trailing content after " +
                             std::to_string(m) + " edges");
    }

    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InputError("duplicate edge " + std::to_string(dup->first) + "-" +
                         std::to_string(dup->second));
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Labeling parse_labeling(const std::string& text, int order) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<int> label_of(order + 1, 0);
    int assigned = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'vertex label'");
        int v = parse_int_field(toks[0], line_no, "vertex id");
        int l = parse_int_field(toks[1], line_no, "label");
        if (v < 1 || v > order)
            throw InputError("line " + std::to_string(line_no) + ": vertex out of range 1.." +
                             std::to_string(order));
        if (label_of[v] != 0)
            throw InputError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                             " labeled twice");
        label_of[v] = l;
        ++assigned;
    }
    if (assigned != order)
        throw InputError("labeling covers " + std::to_string(assigned) + " of " +
                         std::to_string(order) + " vertices");
    return Labeling(std::move(label_of));
}

std::string serialize_labeling(const Labeling& f) {
    std::ostringstream out;
    for (int v = 1; v <= f.size(); ++v) out << v << ' ' << f(v) << '\n';
    return out.str();
}

std::string export_dot(const Graph& g, const std::optional<Labeling>& f) {
    if (f && f->size() != g.order())
        throw InputError("labeling size does not match graph order");
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    std::vector<int> order;
    if (f) {
        order = f->vertices_by_label();
    } else {
        for (int v = 1; v <= g.order(); ++v) order.push_back(v);
    }
    for (int v : order) {
        out << "  " << v;
        if (f) out << " [xlabel=\"" << (*f)(v) << "\"]";
        out << ";\n";
    }
    if (!order.empty()) {
        out << "  { rank=same;";
        for (int v : order) out << ' ' << v << ';';
        out << " }\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace dcl
