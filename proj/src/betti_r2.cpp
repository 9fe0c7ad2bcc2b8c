#include "fgbetti/betti_r2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fgbetti/collapse.hpp"
#include "fgbetti/errors.hpp"

namespace fgb {

namespace {

void require_r2(const filtered_graph& g) {
	if (!g.ps.is_rn() || g.ps.arity() != 2)
		throw poset_error("operation needs a graph graded over rn with 2 coordinates");
}

} // namespace

betti_report betti_r2(const filtered_graph& g, dendro_backend b) {
	require_r2(g);
	collapse_result reduced = vertex_minimize(g);
	const filtered_graph& h = reduced.graph;

	// sweep events in lex grade order, vertices before edges at equal grades,
	// ties within a kind by input index (stable sort keeps them)
	std::vector<std::pair<bool, int>> events;
	events.reserve(h.vertices.size() + h.edges.size());
	for (int i = 0; i < (int)h.vertices.size(); ++i) events.push_back({false, i});
	for (int i = 0; i < (int)h.edges.size(); ++i) events.push_back({true, i});
	auto grade_of = [&](const std::pair<bool, int>& ev) -> const grade& {
		return ev.first ? h.edges[ev.second].g : h.vertices[ev.second].g;
	};
	std::stable_sort(events.begin(), events.end(), [&](const auto& a, const auto& c) {
		int cmp = h.ps.lex_compare(grade_of(a), grade_of(c));
		if (cmp != 0) return cmp < 0;
		return a.first < c.first;
	});

	dynamic_dendrogram dd((int)h.vertices.size(), b);
	std::vector<int> row(h.vertices.size(), 0);
	int rows_seen = 0;
	betti_report rep;
	for (const auto& ev : events) {
		if (!ev.first) {
			row[ev.second] = ++rows_seen;
			rep.beta0.push_back(h.vertices[ev.second].g);
			continue;
		}
		const fg_edge& e = h.edges[ev.second];
		const scalar& y = e.g.coords[1];
		scalar s = dd.time_of_merge(e.u, e.v);
		if (s <= y) {
			// endpoints already merged by y: deletable, only affects H1
			rep.beta0_h1.push_back(e.g);
			continue;
		}
		dd.merge_at_time(e.u, e.v, y);
		rep.beta1.push_back(e.g);
		int col = (int)rep.beta1.size();
		rep.entries.push_back({row[e.u], col, -1});
		rep.entries.push_back({row[e.v], col, +1});
		if (!s.is_pos_inf()) {
			// cycle-creating: the cycle closed by this edge appears at (x, s)
			grade w;
			w.coords = {e.g.coords[0], s};
			rep.beta2.push_back(w);
			rep.beta0_h1.push_back(w);
		}
	}
	return rep;
}

grade witness_grade(const filtered_graph& g, int d) {
	require_r2(g);
	if (d < 0 || d >= (int)g.edges.size())
		throw std::out_of_range("edge index out of range");
	const fg_edge& target = g.edges[d];
	if (target.u == target.v)
		throw poset_error("self-loops have no witness path");

	std::vector<int> order(g.edges.size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
		return g.ps.lex_compare(g.edges[a].g, g.edges[c].g) < 0;
	});

	dynamic_dendrogram dd((int)g.vertices.size(), dendro_backend::naive);
	for (int ei : order) {
		if (ei == d) break;
		const fg_edge& e = g.edges[ei];
		if (e.u != e.v) dd.merge_at_time(e.u, e.v, e.g.coords[1]);
	}
	scalar s = dd.time_of_merge(target.u, target.v);
	if (s.is_pos_inf() || s.is_neg_inf())
		throw poset_error("edge is not cycle-creating: endpoints not connected by earlier edges");
	grade w;
	w.coords = {target.g.coords[0], s};
	return w;
}

} // namespace fgb
