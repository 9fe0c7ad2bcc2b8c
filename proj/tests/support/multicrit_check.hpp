#pragma once

#include <string>
#include <vector>

#include "fgbetti/multicritical.hpp"
#include "fgbetti/oracle.hpp"

namespace fgbtest {

// connected components of the multi-critical sublevel graph at r, labelled
// by first appearance; -1 for dead vertices
inline std::pair<std::vector<int>, int> mc_components_at(const fgb::multicritical_graph& g,
                                                         const fgb::grade& r) {
	auto alive = [&](const std::vector<fgb::grade>& births) {
		for (const fgb::grade& b : births)
			if (g.ps.leq(b, r)) return true;
		return false;
	};
	int n = (int)g.vertices.size();
	fgb::partition p(n);
	for (const fgb::mc_edge& e : g.edges)
		if (alive(e.grades)) p.unite(e.u, e.v);
	std::vector<int> label(n, -1), root_label(n, -1);
	int count = 0;
	for (int v = 0; v < n; ++v) {
		if (!alive(g.vertices[v].grades)) continue;
		int root = p.find(v);
		if (root_label[root] < 0) root_label[root] = count++;
		label[v] = root_label[root];
	}
	return {label, count};
}

// checks that one_criticalize preserved pointwise connectivity: at every
// grid point the expanded graph has the same components as the
// multi-critical input, matched through the provenance map
inline bool pi0_equivalent(const fgb::multicritical_graph& mc, const fgb::onecrit_result& oc,
                           std::string* why = nullptr) {
	auto fail = [&](const std::string& msg) {
		if (why) *why = msg;
		return false;
	};

	std::vector<fgb::grade> all;
	for (const fgb::mc_vertex& v : mc.vertices) all.insert(all.end(), v.grades.begin(), v.grades.end());
	for (const fgb::mc_edge& e : mc.edges) all.insert(all.end(), e.grades.begin(), e.grades.end());
	for (const fgb::fg_vertex& v : oc.graph.vertices) all.push_back(v.g);
	for (const fgb::fg_edge& e : oc.graph.edges) all.push_back(e.g);
	fgb::grade_grid grid = fgb::grade_grid::from_grades(mc.ps, all);

	// alive copies of each original vertex, via provenance
	std::vector<std::vector<int>> copies(mc.vertices.size());
	for (int c = 0; c < (int)oc.graph.vertices.size(); ++c) {
		auto it = oc.provenance.find(oc.graph.vertices[c].id);
		std::string orig = it == oc.provenance.end() ? oc.graph.vertices[c].id : it->second;
		int ov = mc.vertex_index(orig);
		if (ov < 0) return fail("vertex copy '" + oc.graph.vertices[c].id + "' has no origin");
		copies[ov].push_back(c);
	}

	for (int a = 0; a < grid.points(); ++a) {
		fgb::grade r = grid.point(a);
		auto [mc_label, mc_count] = mc_components_at(mc, r);
		fgb::component_map ex = fgb::components_at(oc.graph, r);
		if (mc_count != ex.count)
			return fail("component counts differ at grade " + mc.ps.grade_str(r));

		std::vector<int> rep(mc.vertices.size(), -1);
		for (int v = 0; v < (int)mc.vertices.size(); ++v) {
			int lab = -1;
			for (int c : copies[v]) {
				if (ex.label[c] < 0) continue;
				if (lab < 0) lab = ex.label[c];
				else if (lab != ex.label[c])
					return fail("copies of '" + mc.vertices[v].id + "' split at grade " +
					            mc.ps.grade_str(r));
			}
			if ((mc_label[v] >= 0) != (lab >= 0))
				return fail("liveness of '" + mc.vertices[v].id + "' differs at grade " +
				            mc.ps.grade_str(r));
			rep[v] = lab;
		}
		for (int v = 0; v < (int)mc.vertices.size(); ++v)
			for (int w = v + 1; w < (int)mc.vertices.size(); ++w) {
				if (mc_label[v] < 0 || mc_label[w] < 0) continue;
				if ((mc_label[v] == mc_label[w]) != (rep[v] == rep[w]))
					return fail("connectivity of '" + mc.vertices[v].id + "' and '" +
					            mc.vertices[w].id + "' differs at grade " + mc.ps.grade_str(r));
			}
	}
	return true;
}

} // namespace fgbtest
