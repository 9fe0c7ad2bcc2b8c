#pragma once

#include "multicritical.hpp"

namespace fgb {

// seeded random instance generators. all randomness comes from a raw
// mt19937_64 stream so a (seed, shape) pair pins the instance exactly.
struct bench_config {
	uint64_t seed = 1;
	int vertices = 16;
	int edges = 32;
	int grid = 8;  // coordinates are integers in [0, grid)
	int arity = 2; // R^n arity
};

// integer-graded graph over R^arity: vertex grades uniform on the grid, edge
// grades the join of the endpoints bumped up by a random point, with a few
// percent of self-loops mixed in
filtered_graph random_graph(const bench_config& cfg);

// like random_graph but every simplex gets 1..max_grades birth grades
multicritical_graph random_multicritical(const bench_config& cfg, int max_grades);

// random finite lattice: bitmask closure under and/or, at most max_elems
// elements, with a graph filtered over it (edge grades above endpoint joins)
filtered_graph random_finite_lattice_graph(uint64_t seed, int max_elems, int vertices, int edges);

// uniformly re-labels and re-orders vertices and edges; grades travel along.
// used by the permutation invariance tests.
filtered_graph permute_graph(const filtered_graph& g, uint64_t seed);

} // namespace fgb
