#include "fgbetti/presentation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fgb {

minpres_result minimal_presentation(const filtered_graph& g) {
	collapse_result cr = vertex_minimize(g);
	const filtered_graph& h = cr.graph;
	int m = (int)h.edges.size();

	// deletion order: lexicographic grade order (ties by input index) over
	// R^n so the kept columns match the sweep algorithm's column for column;
	// plain input order over a general poset, where no lex order exists
	std::vector<int> order(m);
	std::iota(order.begin(), order.end(), 0);
	if (h.ps.is_rn())
		std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
			return h.ps.lex_compare(h.edges[a].g, h.edges[b].g) < 0;
		});

	enum { unvisited = 0, kept = 1, deleted = 2 };
	std::vector<char> state(m, unvisited);
	std::vector<std::vector<int>> adj(h.vertices.size());
	for (int i = 0; i < m; ++i) {
		if (h.edges[i].u == h.edges[i].v) continue;
		adj[h.edges[i].u].push_back(i);
		adj[h.edges[i].v].push_back(i);
	}

	// scratch buffers with a generation stamp so each search starts clean
	std::vector<int> stamp(h.vertices.size(), -1);
	std::deque<int> queue;
	int generation = 0;

	// over R^n an edge may witness a deletion only once processed and kept
	// (everything before it in lex order); over a finite poset any other
	// not-yet-deleted edge of smaller grade counts, as later input positions
	// can still hold smaller grades
	auto usable = [&](int d) { return h.ps.is_rn() ? state[d] == kept : state[d] != deleted; };

	for (int e : order) {
		const fg_edge& ed = h.edges[e];
		if (ed.u == ed.v) {
			state[e] = deleted;
			continue;
		}
		++generation;
		queue.clear();
		queue.push_back(ed.u);
		stamp[ed.u] = generation;
		bool connected = false;
		while (!queue.empty() && !connected) {
			int x = queue.front();
			queue.pop_front();
			for (int di : adj[x]) {
				if (di == e || !usable(di)) continue;
				const fg_edge& d = h.edges[di];
				if (!h.ps.leq(d.g, ed.g)) continue;
				int y = d.u == x ? d.v : d.u;
				if (stamp[y] == generation) continue;
				if (y == ed.v) {
					connected = true;
					break;
				}
				stamp[y] = generation;
				queue.push_back(y);
			}
		}
		state[e] = connected ? deleted : kept;
	}

	minpres_result out;
	out.vertex_map = std::move(cr.vertex_map);
	out.pres.rows = std::move(cr.beta0);
	out.graph.ps = h.ps;
	for (const fg_vertex& v : h.vertices) out.graph.add_vertex(v.id, v.g);
	int col = 0;
	for (int e : order) {
		if (state[e] != kept) continue;
		const fg_edge& ed = h.edges[e];
		++col;
		out.pres.cols.push_back(ed.g);
		out.pres.entries.push_back({ed.u + 1, col, -1});
		out.pres.entries.push_back({ed.v + 1, col, +1});
	}
	for (int e = 0; e < m; ++e)
		if (state[e] == kept) out.graph.add_edge(h.edges[e].id, h.edges[e].u, h.edges[e].v, h.edges[e].g);
	return out;
}

int presented_module_dimension(const poset& ps, const sparse_presentation& p, const grade& r) {
	int n = (int)p.rows.size();
	std::vector<char> row_alive(n, 0);
	int alive = 0;
	for (int i = 0; i < n; ++i)
		if (ps.leq(p.rows[i], r)) {
			row_alive[i] = 1;
			++alive;
		}

	std::vector<std::vector<int>> col_rows(p.cols.size());
	for (const matrix_entry& e : p.entries) col_rows[e.col - 1].push_back(e.row - 1);

	partition part(n);
	int merges = 0;
	for (int j = 0; j < (int)p.cols.size(); ++j) {
		if (!ps.leq(p.cols[j], r)) continue;
		for (size_t k = 1; k < col_rows[j].size(); ++k) {
			int a = col_rows[j][k - 1], b = col_rows[j][k];
			if (row_alive[a] && row_alive[b] && part.unite(a, b)) ++merges;
		}
	}
	return alive - merges;
}

} // namespace fgb
