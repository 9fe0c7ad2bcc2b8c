#include "fgbetti/collapse.hpp"

namespace fgb {

namespace {

// incident non-loop edges per vertex, in edge input order
std::vector<std::vector<int>> adjacency(const filtered_graph& g) {
	std::vector<std::vector<int>> adj(g.vertices.size());
	for (int i = 0; i < (int)g.edges.size(); ++i) {
		const fg_edge& e = g.edges[i];
		if (e.u == e.v) continue;
		adj[e.u].push_back(i);
		adj[e.v].push_back(i);
	}
	return adj;
}

// rebuild the graph after a collapse pass: phi maps every vertex to its root,
// removed marks the collapsed tree edges. returns the new graph plus the
// original-index -> root-id map.
collapse_result materialize(const filtered_graph& g, const std::vector<int>& phi,
                            const std::vector<char>& removed) {
	collapse_result out;
	out.graph.ps = g.ps;
	std::vector<int> new_index(g.vertices.size(), -1);
	for (int v = 0; v < (int)g.vertices.size(); ++v)
		if (phi[v] == v) new_index[v] = out.graph.add_vertex(g.vertices[v].id, g.vertices[v].g);
	for (int i = 0; i < (int)g.edges.size(); ++i) {
		if (removed[i]) continue;
		const fg_edge& e = g.edges[i];
		out.graph.add_edge(e.id, new_index[phi[e.u]], new_index[phi[e.v]], e.g);
	}
	for (int v = 0; v < (int)g.vertices.size(); ++v)
		out.vertex_map.emplace(g.vertices[v].id, g.vertices[phi[v]].id);
	return out;
}

int other_end(const fg_edge& e, int u) { return e.u == u ? e.v : e.u; }

} // namespace

collapse_result collapse_local(const filtered_graph& g) {
	auto adj = adjacency(g);
	std::vector<int> phi(g.vertices.size());
	for (int v = 0; v < (int)g.vertices.size(); ++v) phi[v] = v;
	std::vector<char> visited(g.vertices.size(), 0);
	std::vector<char> removed(g.edges.size(), 0);

	// depth first search along edges whose grade equals both endpoint grades;
	// the visited set is global, so each local cluster folds onto the first
	// root that reaches it
	std::vector<std::pair<int, int>> stack; // (entering edge or -1, vertex)
	for (int root = 0; root < (int)g.vertices.size(); ++root) {
		if (visited[root]) continue;
		stack.push_back({-1, root});
		while (!stack.empty()) {
			auto [e, u] = stack.back();
			stack.pop_back();
			if (visited[u]) continue;
			visited[u] = 1;
			if (e >= 0) {
				phi[u] = root;
				removed[e] = 1;
			}
			for (int ei : adj[u]) {
				const fg_edge& d = g.edges[ei];
				int x = other_end(d, u);
				if (visited[x]) continue;
				if (d.g == g.vertices[u].g && d.g == g.vertices[x].g) stack.push_back({ei, x});
			}
		}
	}
	return materialize(g, phi, removed);
}

collapse_result vertex_minimize(const filtered_graph& g) {
	collapse_result local = collapse_local(g);
	const filtered_graph& h = local.graph;

	auto adj = adjacency(h);
	std::vector<int> phi(h.vertices.size());
	for (int v = 0; v < (int)h.vertices.size(); ++v) phi[v] = v;
	std::vector<char> visited(h.vertices.size(), 0);
	std::vector<char> removed(h.edges.size(), 0);

	// h has no local edges, so an incident edge at the vertex's own grade
	// always comes from strictly below and disqualifies the vertex as minimal
	auto is_minimal = [&](int v) {
		for (int ei : adj[v])
			if (h.edges[ei].g == h.vertices[v].g) return false;
		return true;
	};

	std::vector<std::pair<int, int>> stack;
	for (int root = 0; root < (int)h.vertices.size(); ++root) {
		if (visited[root] || !is_minimal(root)) continue;
		stack.push_back({-1, root});
		while (!stack.empty()) {
			auto [e, u] = stack.back();
			stack.pop_back();
			if (visited[u]) continue;
			visited[u] = 1;
			if (e >= 0) {
				phi[u] = root;
				removed[e] = 1;
			}
			// climb along collapsible edges that sit at the upper endpoint's grade
			for (int ei : adj[u]) {
				const fg_edge& d = h.edges[ei];
				int x = other_end(d, u);
				if (visited[x]) continue;
				if (d.g == h.vertices[x].g) stack.push_back({ei, x});
			}
		}
	}

	collapse_result out = materialize(h, phi, removed);
	out.beta0.reserve(out.graph.vertices.size());
	for (const fg_vertex& v : out.graph.vertices) out.beta0.push_back(v.g);

	// compose the two passes into one original-id -> survivor-id map
	collapse_result composed;
	composed.graph = std::move(out.graph);
	composed.beta0 = std::move(out.beta0);
	for (const auto& [orig, mid] : local.vertex_map)
		composed.vertex_map.emplace(orig, out.vertex_map.at(mid));
	return composed;
}

} // namespace fgb
