#pragma once

#include <array>
#include <optional>
#include <string>

#include "dcl/graph.hpp"

namespace dcl {

// The two four-vertex patterns that block degree completeness of a labeled
// graph: a pair of disjoint edges whose label intervals cross (H1) or nest
// (H2). Sequential intervals are harmless.
enum class WitnessKind { crossing, nested };

// "H1" for crossing, "H2" for nested; the vocabulary used on the CLI.
std::string witness_kind_name(WitnessKind kind);

struct LabeledWitness {
    WitnessKind kind = WitnessKind::crossing;
    std::array<int, 4> labels{};  // k1 < k2 < k3 < k4
    std::array<Edge, 2> edges{};  // crossing: {k1,k3},{k2,k4}; nested: {k1,k4},{k2,k3}
};

// Lexicographically smallest witness by (k1,k2,k3,k4), or nullopt if the
// labeled graph is degree complete. Worst case O(m^2), but a linear sweep
// answers the existence question first, so degree-complete inputs never pay
// the quadratic scan.
std::optional<LabeledWitness> find_forbidden_configuration(const LabeledGraph& g);

// Existence-only check in O(n + m).
bool has_forbidden_configuration(const LabeledGraph& g);

bool is_degree_complete(const LabeledGraph& g);

}  // namespace dcl
