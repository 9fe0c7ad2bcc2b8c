#include "fgbetti/multicritical.hpp"

#include <algorithm>
#include <unordered_set>

#include "fgbetti/errors.hpp"

namespace fgb {

int multicritical_graph::add_vertex(std::string id, std::vector<grade> grades) {
	int idx = (int)vertices.size();
	vindex_.emplace(id, idx);
	vertices.push_back({std::move(id), std::move(grades)});
	return idx;
}

int multicritical_graph::add_edge(std::string id, int u, int v, std::vector<grade> grades) {
	int idx = (int)edges.size();
	edges.push_back({std::move(id), u, v, std::move(grades)});
	return idx;
}

int multicritical_graph::vertex_index(const std::string& id) const {
	auto it = vindex_.find(id);
	return it == vindex_.end() ? -1 : it->second;
}

std::vector<std::string> validate(const multicritical_graph& g) {
	std::vector<std::string> bad;
	auto check_grades = [&](const std::vector<grade>& grades, const std::string& what) {
		if (grades.empty()) {
			bad.push_back(what + " has an empty grade set");
			return;
		}
		for (const grade& p : grades) {
			g.ps.require(p);
			if (g.ps.is_rn())
				for (const scalar& s : p.coords)
					if (!s.is_finite()) {
						bad.push_back(what + " has a non-finite coordinate");
						return;
					}
		}
	};
	std::unordered_map<std::string, int> seen;
	for (int i = 0; i < (int)g.vertices.size(); ++i) {
		const mc_vertex& v = g.vertices[i];
		if (v.id.empty()) bad.push_back("vertex " + std::to_string(i) + " has an empty id");
		else if (!seen.emplace(v.id, i).second) bad.push_back("duplicate vertex id '" + v.id + "'");
		try {
			check_grades(v.grades, "vertex '" + v.id + "'");
		} catch (const descriptor_error& e) {
			bad.push_back("vertex '" + v.id + "': " + e.what());
		}
	}
	seen.clear();
	for (int i = 0; i < (int)g.edges.size(); ++i) {
		const mc_edge& e = g.edges[i];
		if (e.id.empty()) bad.push_back("edge " + std::to_string(i) + " has an empty id");
		else if (!seen.emplace(e.id, i).second) bad.push_back("duplicate edge id '" + e.id + "'");
		if (e.u < 0 || e.u >= (int)g.vertices.size() || e.v < 0 || e.v >= (int)g.vertices.size()) {
			bad.push_back("edge '" + e.id + "' has an endpoint index out of range");
			continue;
		}
		try {
			check_grades(e.grades, "edge '" + e.id + "'");
			auto supported = [&](int w, const grade& p) {
				for (const grade& q : g.vertices[w].grades)
					if (g.ps.leq(q, p)) return true;
				return false;
			};
			for (const grade& p : e.grades)
				if (!supported(e.u, p) || !supported(e.v, p)) {
					bad.push_back("edge '" + e.id + "' has a birth grade below every birth of an endpoint");
					break;
				}
		} catch (const descriptor_error& ex) {
			bad.push_back("edge '" + e.id + "': " + ex.what());
		}
	}
	return bad;
}

std::vector<grade> canonical_grade_set(const poset& ps, const std::vector<grade>& grades) {
	std::vector<grade> out;
	for (const grade& p : grades) {
		bool dominated = false;
		for (const grade& q : grades)
			if (&q != &p && (ps.less(q, p) || (q == p && &q < &p))) {
				dominated = true;
				break;
			}
		if (!dominated) out.push_back(p);
	}
	return out;
}

std::vector<join_edge> minimal_join_edges(const poset& ps, const std::vector<grade>& grades) {
	int n = (int)grades.size();
	struct pairing {
		int a, b;
		grade at;
	};
	std::vector<pairing> joins;
	for (int a = 0; a < n; ++a)
		for (int b = a + 1; b < n; ++b) {
			auto j = ps.join(grades[a], grades[b]);
			joins.push_back({a, b, std::move(j)});
		}
	// each pair realizes exactly one join value, so one pair per minimal join
	// value is the minimum possible cardinality; take the first pair in index
	// order for each
	std::vector<join_edge> out;
	for (const pairing& c : joins) {
		bool minimal = true;
		for (const pairing& d : joins)
			if (ps.less(d.at, c.at)) {
				minimal = false;
				break;
			}
		if (!minimal) continue;
		bool taken = false;
		for (const join_edge& kept : out)
			if (kept.at == c.at) {
				taken = true;
				break;
			}
		if (!taken) out.push_back({c.a, c.b, c.at});
	}
	return out;
}

namespace {

std::string fresh_id(std::string base, std::unordered_set<std::string>& used) {
	while (!used.insert(base).second) base += '~';
	return base;
}

} // namespace

onecrit_result one_criticalize(const multicritical_graph& g) {
	auto bad = validate(g);
	if (!bad.empty()) throw parse_error("invalid multi-critical graph: " + bad.front());

	onecrit_result res;
	res.graph.ps = g.ps;

	// reserve all input ids up front so generated ids never shadow them
	std::unordered_set<std::string> used;
	for (const mc_vertex& v : g.vertices) used.insert(v.id);
	for (const mc_edge& e : g.edges) used.insert(e.id);

	// canonical births in lex order for rn (determinism under permutation of
	// the input grade list), first-appearance order for finite posets
	auto births_of = [&](const std::vector<grade>& grades) {
		std::vector<grade> out = canonical_grade_set(g.ps, grades);
		if (g.ps.is_rn())
			std::sort(out.begin(), out.end(), [&](const grade& a, const grade& b) {
				return g.ps.lex_compare(a, b) < 0;
			});
		return out;
	};

	// copies[vi][k] = output index of the k-th canonical birth of vertex vi
	std::vector<std::vector<grade>> vgrades(g.vertices.size());
	std::vector<std::vector<int>> copies(g.vertices.size());
	for (int vi = 0; vi < (int)g.vertices.size(); ++vi) {
		const mc_vertex& v = g.vertices[vi];
		vgrades[vi] = births_of(v.grades);
		if (vgrades[vi].size() == 1) {
			copies[vi].push_back(res.graph.add_vertex(v.id, vgrades[vi][0]));
			res.provenance.emplace(v.id, v.id);
			continue;
		}
		for (int k = 0; k < (int)vgrades[vi].size(); ++k) {
			std::string id = fresh_id(v.id + "@" + std::to_string(k), used);
			res.provenance.emplace(id, v.id);
			copies[vi].push_back(res.graph.add_vertex(std::move(id), vgrades[vi][k]));
		}
		auto idents = minimal_join_edges(g.ps, vgrades[vi]);
		for (int k = 0; k < (int)idents.size(); ++k) {
			std::string id = fresh_id(v.id + "+" + std::to_string(k), used);
			res.provenance.emplace(id, v.id);
			res.graph.add_edge(std::move(id), copies[vi][idents[k].a], copies[vi][idents[k].b],
			                   idents[k].at);
		}
	}

	// each edge birth hangs off the first endpoint copy born below it
	auto anchor = [&](int vi, const grade& p) {
		for (int k = 0; k < (int)vgrades[vi].size(); ++k)
			if (g.ps.leq(vgrades[vi][k], p)) return copies[vi][k];
		return -1;
	};
	for (const mc_edge& e : g.edges) {
		std::vector<grade> births = births_of(e.grades);
		for (int k = 0; k < (int)births.size(); ++k) {
			std::string id = births.size() == 1 ? e.id
			                                    : fresh_id(e.id + "@" + std::to_string(k), used);
			res.provenance.emplace(id, e.id);
			res.graph.add_edge(std::move(id), anchor(e.u, births[k]), anchor(e.v, births[k]),
			                   births[k]);
		}
	}
	return res;
}

} // namespace fgb
