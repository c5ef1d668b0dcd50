#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcl/graph.hpp"

namespace dcl {

// Minimal unlabeled obstructions to having a degree complete labeling:
//   spider     - a center with three internally disjoint legs of length 2
//                (7 vertices), the smallest tree that is not a caterpillar
//   net        - a triangle with one pendant vertex on each corner (6 vertices)
//   long_cycle - any cycle on at least 4 vertices
enum class ObstructionKind { spider, net, long_cycle };

// "T1" for spider, "T2" for net, "CYCLE" for long_cycle; CLI vocabulary,
// aligned with the generator family names.
std::string obstruction_kind_name(ObstructionKind kind);

struct ObstructionWitness {
    ObstructionKind kind = ObstructionKind::long_cycle;
    // spider: center, then the three legs as (first, second) steps;
    // net: the triangle corners, then their pendants in the same order;
    // long_cycle: the cycle in traversal order.
    std::vector<int> vertices;
    std::vector<Edge> edges;  // the embedded copy's edges, canonical form
};

// Which reduction produced a Decomposition's residual paths: deleting the
// triangle apexes along with the leaves, or deleting one break edge per
// triangle while keeping the apexes.
enum class Route { apexes, break_edges };

struct Decomposition {
    std::vector<int> leaf_set;            // all degree-1 vertices
    std::vector<int> apex_set;            // greedy degree-2 triangle tops
    std::vector<Edge> break_edge_set;     // one edge per triangle, opposite an apex
    std::vector<std::vector<int>> paths;  // residual path sequences, original ids
    Route route = Route::apexes;
};

// Degree-1 vertices, ascending.
std::vector<int> leaf_set(const Graph& g);

// Greedy scan in ascending vertex order: v joins when it has exactly two
// neighbors, they are adjacent, v is their unique common neighbor, and
// neither neighbor joined earlier. At most one vertex per triangle.
std::vector<int> apex_set(const Graph& g);

// One edge per triangle that owns a degree-2 apex: scanning apexes in
// ascending order, the edge joining the apex's two neighbors is taken
// unless one of the apex's own edges was taken before. The apex must be the
// unique common neighbor of its two neighbors, so every chosen edge lies in
// exactly one triangle.
std::vector<Edge> break_edge_set(const Graph& g);

// Remove the leaves and apexes; succeed iff the rest is a disjoint union of
// paths.
std::optional<Decomposition> decompose_via_apexes(const Graph& g);

// Remove the leaves and the break edges; succeed iff the rest is a disjoint
// union of paths.
std::optional<Decomposition> decompose_via_break_edges(const Graph& g);

// Search for a spider, net, or long cycle subgraph. Order: long cycles via
// biconnected blocks first (any block that is neither an edge nor a triangle
// yields one), then nets over the triangle blocks, then spiders per center.
// Returns nullopt iff none of the three patterns embeds into g.
std::optional<ObstructionWitness> find_obstruction(const Graph& g);

struct RecognitionResult {
    bool has_labeling = false;
    std::optional<Decomposition> decomposition;    // present iff has_labeling
    std::optional<ObstructionWitness> obstruction;  // present iff !has_labeling
};

// Decide via decompose_via_apexes; on failure the obstruction search must
// produce a witness, anything else is an internal error.
RecognitionResult has_degree_complete_labeling(const Graph& g);

}  // namespace dcl
