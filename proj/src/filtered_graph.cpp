#include "fgbetti/filtered_graph.hpp"

#include <deque>

namespace fgb {

int filtered_graph::add_vertex(std::string id, grade g) {
	int idx = (int)vertices.size();
	vindex_.emplace(id, idx);
	vertices.push_back({std::move(id), std::move(g)});
	return idx;
}

int filtered_graph::add_edge(std::string id, int u, int v, grade g) {
	int idx = (int)edges.size();
	eindex_.emplace(id, idx);
	edges.push_back({std::move(id), u, v, std::move(g)});
	return idx;
}

int filtered_graph::add_edge_by_ids(std::string id, const std::string& u, const std::string& v, grade g) {
	int ui = vertex_index(u), vi = vertex_index(v);
	if (ui < 0) throw parse_error("unknown vertex id '" + u + "'");
	if (vi < 0) throw parse_error("unknown vertex id '" + v + "'");
	return add_edge(std::move(id), ui, vi, std::move(g));
}

int filtered_graph::vertex_index(const std::string& id) const {
	auto it = vindex_.find(id);
	return it == vindex_.end() ? -1 : it->second;
}

int filtered_graph::edge_index(const std::string& id) const {
	auto it = eindex_.find(id);
	return it == eindex_.end() ? -1 : it->second;
}

std::vector<std::string> validate(const filtered_graph& g) {
	std::vector<std::string> bad;
	std::unordered_map<std::string, int> seen;
	for (int i = 0; i < (int)g.vertices.size(); ++i) {
		const fg_vertex& v = g.vertices[i];
		if (v.id.empty()) bad.push_back("vertex " + std::to_string(i) + " has an empty id");
		else if (!seen.emplace(v.id, i).second) bad.push_back("duplicate vertex id '" + v.id + "'");
		try {
			g.ps.require(v.g);
			if (g.ps.is_rn())
				for (const scalar& s : v.g.coords)
					if (!s.is_finite()) bad.push_back("vertex '" + v.id + "' has a non-finite coordinate");
		} catch (const descriptor_error& e) {
			bad.push_back("vertex '" + v.id + "': " + e.what());
		}
	}
	seen.clear();
	for (int i = 0; i < (int)g.edges.size(); ++i) {
		const fg_edge& e = g.edges[i];
		if (e.id.empty()) bad.push_back("edge " + std::to_string(i) + " has an empty id");
		else if (!seen.emplace(e.id, i).second) bad.push_back("duplicate edge id '" + e.id + "'");
		if (e.u < 0 || e.u >= (int)g.vertices.size() || e.v < 0 || e.v >= (int)g.vertices.size()) {
			bad.push_back("edge '" + e.id + "' has an endpoint index out of range");
			continue;
		}
		try {
			g.ps.require(e.g);
			if (g.ps.is_rn())
				for (const scalar& s : e.g.coords)
					if (!s.is_finite()) bad.push_back("edge '" + e.id + "' has a non-finite coordinate");
			if (!g.ps.leq(g.vertices[e.u].g, e.g) || !g.ps.leq(g.vertices[e.v].g, e.g))
				bad.push_back("edge '" + e.id + "' sits below one of its endpoints");
		} catch (const descriptor_error& ex) {
			bad.push_back("edge '" + e.id + "': " + ex.what());
		}
	}
	return bad;
}

sublevel subgraph_at(const filtered_graph& g, const grade& r) {
	sublevel s;
	for (int i = 0; i < (int)g.vertices.size(); ++i)
		if (g.ps.leq(g.vertices[i].g, r)) s.vertices.push_back(i);
	for (int i = 0; i < (int)g.edges.size(); ++i)
		if (g.ps.leq(g.edges[i].g, r)) s.edges.push_back(i);
	return s;
}

component_map components_at(const filtered_graph& g, const grade& r) {
	sublevel s = subgraph_at(g, r);
	partition p((int)g.vertices.size());
	for (int e : s.edges) p.unite(g.edges[e].u, g.edges[e].v);
	component_map cm;
	cm.label.assign(g.vertices.size(), -1);
	std::vector<int> root_label(g.vertices.size(), -1);
	for (int v : s.vertices) {
		int root = p.find(v);
		if (root_label[root] < 0) root_label[root] = cm.count++;
		cm.label[v] = root_label[root];
	}
	return cm;
}

bool is_deletable(const filtered_graph& g, int e) {
	const fg_edge& edge = g.edges.at(e);
	if (edge.u == edge.v) return true;
	// breadth first search from one endpoint over the other edges at f(e)
	std::vector<std::vector<int>> adj(g.vertices.size());
	for (int i = 0; i < (int)g.edges.size(); ++i) {
		if (i == e) continue;
		const fg_edge& d = g.edges[i];
		if (d.u == d.v) continue;
		if (!g.ps.leq(d.g, edge.g)) continue;
		adj[d.u].push_back(d.v);
		adj[d.v].push_back(d.u);
	}
	std::vector<char> visited(g.vertices.size(), 0);
	std::deque<int> queue{edge.u};
	visited[edge.u] = 1;
	while (!queue.empty()) {
		int x = queue.front();
		queue.pop_front();
		if (x == edge.v) return true;
		for (int y : adj[x])
			if (!visited[y]) {
				visited[y] = 1;
				queue.push_back(y);
			}
	}
	return false;
}

bool is_collapsible(const filtered_graph& g, int e) {
	const fg_edge& edge = g.edges.at(e);
	if (edge.u == edge.v) return false;
	return edge.g == g.vertices[edge.u].g || edge.g == g.vertices[edge.v].g;
}

// rebuild g without vertex `gone` and edge `e`, re-wiring gone's edges to keep
static filtered_graph contract(const filtered_graph& g, int e, int gone, int keep) {
	filtered_graph out;
	out.ps = g.ps;
	std::vector<int> vmap(g.vertices.size(), -1);
	for (int i = 0; i < (int)g.vertices.size(); ++i)
		if (i != gone) vmap[i] = out.add_vertex(g.vertices[i].id, g.vertices[i].g);
	vmap[gone] = vmap[keep];
	for (int i = 0; i < (int)g.edges.size(); ++i) {
		if (i == e) continue;
		const fg_edge& d = g.edges[i];
		out.add_edge(d.id, vmap[d.u], vmap[d.v], d.g);
	}
	return out;
}

filtered_graph simple_collapse(const filtered_graph& g, int e) {
	if (!is_collapsible(g, e)) throw poset_error("edge '" + g.edges[e].id + "' is not collapsible");
	const fg_edge& edge = g.edges[e];
	bool u_at = g.vertices[edge.u].g == edge.g;
	bool v_at = g.vertices[edge.v].g == edge.g;
	int gone;
	if (u_at && v_at) gone = std::max(edge.u, edge.v);
	else gone = u_at ? edge.u : edge.v;
	int keep = gone == edge.u ? edge.v : edge.u;
	return contract(g, e, gone, keep);
}

filtered_graph simple_delete(const filtered_graph& g, int e) {
	if (!is_deletable(g, e)) throw poset_error("edge '" + g.edges[e].id + "' is not deletable");
	filtered_graph out;
	out.ps = g.ps;
	for (const fg_vertex& v : g.vertices) out.add_vertex(v.id, v.g);
	for (int i = 0; i < (int)g.edges.size(); ++i)
		if (i != e) out.add_edge(g.edges[i].id, g.edges[i].u, g.edges[i].v, g.edges[i].g);
	return out;
}

} // namespace fgb
