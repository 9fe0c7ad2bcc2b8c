#include "fgbetti/bench.hpp"

#include <algorithm>
#include <random>

#include "fgbetti/errors.hpp"

namespace fgb {

namespace {

grade random_point(std::mt19937_64& mt, int arity, int span) {
	grade g;
	g.coords.reserve(arity);
	for (int j = 0; j < arity; ++j) g.coords.push_back(scalar((long)(mt() % (uint64_t)span)));
	return g;
}

} // namespace

filtered_graph random_graph(const bench_config& cfg) {
	std::mt19937_64 mt(cfg.seed);
	filtered_graph g;
	g.ps = poset::rn(cfg.arity);
	for (int i = 0; i < cfg.vertices; ++i)
		g.add_vertex("v" + std::to_string(i), random_point(mt, cfg.arity, cfg.grid));
	for (int i = 0; i < cfg.edges; ++i) {
		int u = (int)(mt() % (uint64_t)cfg.vertices);
		int v = mt() % 50 == 0 ? u : (int)(mt() % (uint64_t)cfg.vertices);
		grade at = g.ps.join(g.vertices[u].g, g.vertices[v].g);
		//three quarters of the edges get bumped above the join so collapsible and
		// plain edges both show up
		if (mt() % 4 != 0) at = g.ps.join(at, random_point(mt, cfg.arity, cfg.grid));
		g.add_edge("e" + std::to_string(i), u, v, std::move(at));
	}
	return g;
}

multicritical_graph random_multicritical(const bench_config& cfg, int max_grades) {
	if (max_grades < 1) throw std::invalid_argument("max_grades must be at least 1");
	std::mt19937_64 mt(cfg.seed);
	multicritical_graph g;
	g.ps = poset::rn(cfg.arity);
	for (int i = 0; i < cfg.vertices; ++i) {
		int k = 1 + (int)(mt() % (uint64_t)max_grades);
		std::vector<grade> grades;
		for (int t = 0; t < k; ++t) grades.push_back(random_point(mt, cfg.arity, cfg.grid));
		g.add_vertex("v" + std::to_string(i), std::move(grades));
	}
	for (int i = 0; i < cfg.edges; ++i) {
		int u = (int)(mt() % (uint64_t)cfg.vertices);
		int v = (int)(mt() % (uint64_t)cfg.vertices);
		int k = 1 + (int)(mt() % (uint64_t)max_grades);
		std::vector<grade> grades;
		for (int t = 0; t < k; ++t) {
			// dominate one random birth of each endpoint so the result validates
			const auto& bu = g.vertices[u].grades;
			const auto& bv = g.vertices[v].grades;
			grade at = g.ps.join(bu[mt() % bu.size()], bv[mt() % bv.size()]);
			if (mt() % 2 == 0) at = g.ps.join(at, random_point(mt, cfg.arity, cfg.grid));
			grades.push_back(std::move(at));
		}
		g.add_edge("e" + std::to_string(i), u, v, std::move(grades));
	}
	return g;
}

filtered_graph random_finite_lattice_graph(uint64_t seed, int max_elems, int vertices, int edges) {
	std::mt19937_64 mt(seed);

	// random sublattice of the subsets of a 6-element set: seed masks closed
	// under intersection and union always form a lattice
	std::vector<uint32_t> masks;
	for (int attempt = 0; attempt < 64; ++attempt) {
		masks = {0u, 63u};
		for (int i = 0; i < 4; ++i) {
			uint32_t m = (uint32_t)(mt() % 64);
			if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
		}
		for (bool grew = true; grew;) {
			grew = false;
			for (size_t i = 0; i < masks.size(); ++i)
				for (size_t j = i + 1; j < masks.size(); ++j)
					for (uint32_t m : {masks[i] & masks[j], masks[i] | masks[j]}) {
						if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
							masks.push_back(m);
							grew = true;
						}
					}
		}
		if ((int)masks.size() <= max_elems) break;
		masks.clear();
	}
	if (masks.empty()) masks = {0u, 1u, 3u, 7u, 15u, 31u, 63u}; // chain fallback
	std::sort(masks.begin(), masks.end());

	int n = (int)masks.size();
	std::vector<uint8_t> rel((size_t)n * n, 0);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) rel[(size_t)i * n + j] = (masks[i] & masks[j]) == masks[i];
	poset ps = poset::finite(finite_poset(n, std::move(rel)), "random-lattice");

	filtered_graph g;
	g.ps = ps;
	for (int i = 0; i < vertices; ++i)
		g.add_vertex("v" + std::to_string(i), grade((int32_t)(mt() % (uint64_t)n)));
	for (int i = 0; i < edges; ++i) {
		int u = (int)(mt() % (uint64_t)vertices);
		int v = (int)(mt() % (uint64_t)vertices);
		grade at = ps.join(g.vertices[u].g, g.vertices[v].g);
		if (mt() % 4 != 0) at = ps.join(at, grade((int32_t)(mt() % (uint64_t)n)));
		g.add_edge("e" + std::to_string(i), u, v, std::move(at));
	}
	return g;
}

filtered_graph permute_graph(const filtered_graph& g, uint64_t seed) {
	std::mt19937_64 mt(seed);
	std::vector<int> vperm(g.vertices.size()), eperm(g.edges.size());
	for (size_t i = 0; i < vperm.size(); ++i) vperm[i] = (int)i;
	for (size_t i = 0; i < eperm.size(); ++i) eperm[i] = (int)i;
	for (size_t i = vperm.size(); i > 1; --i) std::swap(vperm[i - 1], vperm[mt() % i]);
	for (size_t i = eperm.size(); i > 1; --i) std::swap(eperm[i - 1], eperm[mt() % i]);

	std::vector<int> vpos(g.vertices.size());
	filtered_graph out;
	out.ps = g.ps;
	for (size_t i = 0; i < vperm.size(); ++i) {
		const fg_vertex& v = g.vertices[vperm[i]];
		vpos[vperm[i]] = out.add_vertex(v.id, v.g);
	}
	for (size_t i = 0; i < eperm.size(); ++i) {
		const fg_edge& e = g.edges[eperm[i]];
		out.add_edge(e.id, vpos[e.u], vpos[e.v], e.g);
	}
	return out;
}

} // namespace fgb
