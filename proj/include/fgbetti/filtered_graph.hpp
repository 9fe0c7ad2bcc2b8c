#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "poset.hpp"

namespace fgb {

// union-find over 0..n-1 with path halving and union by size
class partition {
public:
	explicit partition(int n) : parent_(n), size_(n, 1), count_(n) {
		for (int i = 0; i < n; ++i) parent_[i] = i;
	}

	int find(int x) {
		while (parent_[x] != x) {
			parent_[x] = parent_[parent_[x]];
			x = parent_[x];
		}
		return x;
	}

	// returns false if x and y were already in the same class
	bool unite(int x, int y) {
		x = find(x);
		y = find(y);
		if (x == y) return false;
		if (size_[x] < size_[y]) std::swap(x, y);
		parent_[y] = x;
		size_[x] += size_[y];
		--count_;
		return true;
	}

	int count() const { return count_; }
	int size() const { return (int)parent_.size(); }

private:
	std::vector<int> parent_;
	std::vector<int> size_;
	int count_;
};

struct fg_vertex {
	std::string id;
	grade g;
};

struct fg_edge {
	std::string id;
	int u = -1, v = -1; // vertex indices; u == v is a permitted self-loop
	grade g;
};

// graph filtered over a poset: every simplex has a grade, and edges must sit
// above both endpoints. vertices and edges keep their input order, which all
// algorithms use as the deterministic tie-break.
struct filtered_graph {
	poset ps = poset::rn(1);
	std::vector<fg_vertex> vertices;
	std::vector<fg_edge> edges;

	int add_vertex(std::string id, grade g);
	int add_edge(std::string id, int u, int v, grade g);
	int add_edge_by_ids(std::string id, const std::string& u, const std::string& v, grade g);

	// index lookups by id; -1 when absent
	int vertex_index(const std::string& id) const;
	int edge_index(const std::string& id) const;

private:
	std::unordered_map<std::string, int> vindex_, eindex_;
};

// structural violations (duplicate ids, bad endpoints, descriptor mismatches,
// non-finite coordinates, edges below their endpoints); empty iff valid
std::vector<std::string> validate(const filtered_graph& g);

// vertex and edge indices alive at grade r, in input order
struct sublevel {
	std::vector<int> vertices;
	std::vector<int> edges;
};
sublevel subgraph_at(const filtered_graph& g, const grade& r);

// connected components of the sublevel graph at r. label[v] is the component
// of vertex v, numbered by first appearance in input order, or -1 if v is not
// alive at r.
struct component_map {
	std::vector<int> label;
	int count = 0;
};
component_map components_at(const filtered_graph& g, const grade& r);

// true iff the endpoints of edge e are connected at grade f(e) without e
bool is_deletable(const filtered_graph& g, int e);

// true iff f(e) equals the grade of at least one endpoint of the non-loop e
bool is_collapsible(const filtered_graph& g, int e);

// contract a collapsible edge: the endpoint whose grade equals f(e) is removed
// and all its edges re-wired to the survivor. if both endpoints qualify, the
// one with the larger input index is removed. throws poset_error otherwise.
filtered_graph simple_collapse(const filtered_graph& g, int e);

// remove a deletable edge; throws poset_error if e is not deletable
filtered_graph simple_delete(const filtered_graph& g, int e);

} // namespace fgb
