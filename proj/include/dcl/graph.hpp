#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcl {

// Malformed user input: files, CLI values, out-of-range vertex ids.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded enumeration would exceed its configured cap.
struct EnumerationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant that should be unreachable failed; always a bug, never user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Undirected edge, stored canonically as (min, max).
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// Simple undirected graph on vertices 1..n, immutable after construction.
// Edges are kept canonical ((min,max), lexicographically sorted) so that two
// graphs compare equal iff they have the same vertex count and edge set.
class Graph {
public:
    Graph() = default;
    Graph(int order, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // 1-indexed, neighbor lists sorted

    void require_vertex(int v) const;
};

// A graph whose vertex ids are read as labels: vertex i carries label i.
// Labeling questions about (g, f) are asked about apply_labeling(g, f).
using LabeledGraph = Graph;

// Bijection from vertices 1..n onto labels 1..n.
class Labeling {
public:
    explicit Labeling(std::vector<int> label_of_vertex);  // index 1..n, slot 0 ignored
    static Labeling identity(int n);

    int size() const { return n_; }
    int operator()(int v) const;
    // vertices listed in label order: result[k-1] is the vertex labeled k
    std::vector<int> vertices_by_label() const;

    bool operator==(const Labeling& other) const = default;

private:
    int n_ = 0;
    std::vector<int> label_of_;  // size n_+1
};

// Relabels g: edge {u,v} becomes {f(u), f(v)}.
LabeledGraph apply_labeling(const Graph& g, const Labeling& f);

// Induced subgraph with dense ids plus the id remap in both directions.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id (1-based) -> original id; slot 0 unused
    std::vector<int> to_new;       // original id -> new id, 0 if removed
};

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& removed);

// Same vertex set, edge set minus `removed`; every removed edge must exist.
Graph remove_edges(const Graph& g, const std::vector<Edge>& removed);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// If every component is a simple path (an isolated vertex counts as a
// zero-length path), returns one vertex sequence per component, each starting
// from its lowest-id endpoint of degree <= 1. Otherwise nullopt.
std::optional<std::vector<std::vector<int>>> path_decomposition(const Graph& g);

// Text format: first line "n m", then m lines "u v" (1-based).
// Loops, duplicate edges, bad ids and malformed lines are rejected with the
// offending line number in the message.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Labeling file format: n lines "vertex label".
Labeling parse_labeling(const std::string& text, int order);
std::string serialize_labeling(const Labeling& f);

// Graphviz output. With a labeling, vertices are listed in label order and
// share one rank so the drawing is a line with edges arcing over it.
std::string export_dot(const Graph& g, const std::optional<Labeling>& f = std::nullopt);

}  // namespace dcl
