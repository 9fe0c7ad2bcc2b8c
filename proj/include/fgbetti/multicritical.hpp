#pragma once

#include <map>
#include <utility>

#include "filtered_graph.hpp"

namespace fgb {

struct mc_vertex {
	std::string id;
	std::vector<grade> grades; // non-empty; treated as the set of births
};

struct mc_edge {
	std::string id;
	int u = -1, v = -1;
	std::vector<grade> grades;
};

// graph where every simplex carries a finite set of birth grades; a simplex
// is alive at r iff some birth grade sits below r
struct multicritical_graph {
	poset ps = poset::rn(1);
	std::vector<mc_vertex> vertices;
	std::vector<mc_edge> edges;

	int add_vertex(std::string id, std::vector<grade> grades);
	int add_edge(std::string id, int u, int v, std::vector<grade> grades);
	int vertex_index(const std::string& id) const;

private:
	std::unordered_map<std::string, int> vindex_;
};

// structural violations; in particular every edge birth grade must dominate
// some birth grade of each endpoint
std::vector<std::string> validate(const multicritical_graph& g);

// minimal birth grades in order of first appearance; drops duplicates and
// dominated grades, which do not change any sublevel graph
std::vector<grade> canonical_grade_set(const poset& ps, const std::vector<grade>& grades);

// identification edges for a vertex with birth set `grades` (canonicalized
// indices): one pair per minimal pairwise join, each realized by the first
// pair in index order. the result has minimum possible cardinality.
struct join_edge {
	int a = 0, b = 0; // indices into the canonical grade set
	grade at;         // join grade
};
std::vector<join_edge> minimal_join_edges(const poset& ps, const std::vector<grade>& grades);

struct onecrit_result {
	filtered_graph graph;
	// output simplex id -> input simplex id it descends from
	std::map<std::string, std::string> provenance;
};

// expansion into a 1-critical filtered graph with the same pointwise
// connectivity: one vertex copy per birth grade wired by identification
// edges at the minimal joins, one edge copy per edge birth grade attached to
// the first endpoint copies below it. first homology is not preserved.
// simplices with a single birth grade keep their id; copies get "@k" and
// identification edges "+k" suffixes.
onecrit_result one_criticalize(const multicritical_graph& g);

} // namespace fgb
