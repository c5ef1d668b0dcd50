#pragma once

#include <cstdint>

#include "dcl/graph.hpp"

namespace dcl {

Graph make_path(int n);   // n >= 1
Graph make_cycle(int n);  // n >= 3
Graph make_star(int n);   // n >= 1, vertex 1 is the center

// The 7-vertex tree with three length-2 legs from one center; smallest tree
// without a degree complete labeling. CLI family name: t1.
Graph make_spider();

// Triangle with one pendant vertex per corner (6 vertices). CLI family: t2.
Graph make_net();

// k triangles, consecutive ones joined by a bridge; always labelable.
Graph make_triangle_chain(int k);

// Random caterpillar: a spine path with leaves hung on random spine vertices.
Graph make_caterpillar(int n, std::uint64_t seed);

// Uniform simple graph with n vertices and m edges.
Graph make_gnm(int n, int m, std::uint64_t seed);

// Random graph guaranteed to admit a degree complete labeling: a caterpillar
// with some spine edges doubled into triangles through fresh degree-2
// vertices, then all vertex ids shuffled. CLI family: random_dcl.
Graph make_labelable(int n, std::uint64_t seed);

}  // namespace dcl
