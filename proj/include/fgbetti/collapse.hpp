#pragma once

#include <map>

#include "filtered_graph.hpp"

namespace fgb {

using betti_table = std::vector<grade>;

struct collapse_result {
	filtered_graph graph;
	// grades of the surviving vertices in input order; filled by vertex_minimize
	betti_table beta0;
	// original vertex id -> id of the surviving vertex it was folded into
	std::map<std::string, std::string> vertex_map;
};

// remove all locally collapsible edges (grade equal to both endpoints) by
// depth first search, folding each local cluster onto the vertex the search
// entered it from. parallel local edges survive as self-loops on the root.
collapse_result collapse_local(const filtered_graph& g);

// full vertex minimization: after the local pass, grow a forest from the
// minimal vertices along collapsible edges that step strictly up in grade and
// fold everything onto the forest roots. the result has no collapsible edges,
// and beta0 lists the root grades.
collapse_result vertex_minimize(const filtered_graph& g);

} // namespace fgb
