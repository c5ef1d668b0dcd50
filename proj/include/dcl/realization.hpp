#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "dcl/graph.hpp"

namespace dcl {

// Assignment of a direction to every edge: arcs[i] = (tail, head) for the
// i-th edge in the graph's canonical edge order.
struct Orientation {
    int order = 0;
    std::vector<Edge> arcs;
};

using DegreeVector = std::vector<int>;

DegreeVector out_degrees(const Orientation& o);

// Out-degree vectors of the two extreme orientations: every edge pointing at
// its smaller endpoint (leftward) or its larger endpoint (rightward). Under
// the dominance order these bound every achievable out-degree vector.
DegreeVector leftward_out_degrees(const Graph& g);
DegreeVector rightward_out_degrees(const Graph& g);

// Number of edges with exactly one endpoint in {1..k}; k in 1..n.
int cut_count(const Graph& g, int k);

// Dominance order: prefix sums of s never exceed those of t and the totals
// are equal. A partial order on vectors of fixed length and sum.
bool dominance_leq(const DegreeVector& s, const DegreeVector& t);

// A vector is feasible for g when it lies in the dominance window between the
// leftward and rightward extremes and 0 <= s_i <= deg(i) for every vertex.
// Every out-degree vector of an orientation is feasible; g is degree complete
// exactly when the converse holds too.
bool is_feasible_vector(const Graph& g, const DegreeVector& s);

// Enumerates all feasible vectors in lexicographic order. Stops early when fn
// returns false. Throws EnumerationLimitError once more than `cap` vectors
// have been emitted (so an overflow is distinguishable from an empty result).
void for_each_feasible_vector(const Graph& g, std::int64_t cap,
                              const std::function<bool(const DegreeVector&)>& fn);
std::vector<DegreeVector> enumerate_feasible_vectors(const Graph& g,
                                                     std::int64_t cap = 1'000'000);

// Orientation with out-degree vector exactly s, or nullopt. When both
// endpoints of an edge can take it, the lower id wins; augmenting moves scan
// vertices and edges in ascending order, so the result is deterministic.
std::optional<Orientation> realize(const Graph& g, const DegreeVector& s);

// All 2^m orientations, ascending by bitmask (bit i set = edge i points at
// its smaller endpoint). Refuses graphs with more than max_edges edges.
void for_each_orientation(const Graph& g, int max_edges,
                          const std::function<bool(const Orientation&)>& fn);
std::vector<Orientation> enumerate_orientations(const Graph& g, int max_edges = 20);

struct OracleResult {
    bool degree_complete = false;
    // lexicographically first feasible vector with no realizing orientation
    std::optional<DegreeVector> counterexample;
};

// Reference decision by exhaustion: realize every feasible vector.
OracleResult is_degree_complete_oracle(const Graph& g, std::int64_t max_vectors = 1'000'000);

}  // namespace dcl
