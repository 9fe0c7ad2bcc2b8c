#include "fgbetti/oracle.hpp"

#include <algorithm>

#include "fgbetti/errors.hpp"

namespace fgb {

grade_grid grade_grid::from_grades(const poset& ps, const std::vector<grade>& grades, int axis_cap) {
	grade_grid grid;
	grid.ps_ = ps;
	if (!ps.is_rn()) {
		grid.points_ = ps.fp().size();
		return grid;
	}
	grid.axes_.resize(ps.arity());
	for (const grade& g : grades)
		for (int j = 0; j < ps.arity(); ++j) grid.axes_[j].push_back(g.coords[j]);
	long long total = 1;
	for (auto& axis : grid.axes_) {
		std::sort(axis.begin(), axis.end());
		axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
		if ((int)axis.size() > axis_cap)
			throw resource_error("verification grid axis exceeds " + std::to_string(axis_cap) +
			                     " distinct values");
		total *= (long long)axis.size();
	}
	if (total > (1ll << 26)) throw resource_error("verification grid too large");
	grid.points_ = (int)total;
	return grid;
}

grade_grid grade_grid::from_graph(const filtered_graph& g, int axis_cap) {
	std::vector<grade> grades;
	grades.reserve(g.vertices.size() + g.edges.size());
	for (const fg_vertex& v : g.vertices) grades.push_back(v.g);
	for (const fg_edge& e : g.edges) grades.push_back(e.g);
	return from_grades(g.ps, grades, axis_cap);
}

std::vector<int> grade_grid::coords(int flat) const {
	std::vector<int> c(axes_.size(), 0);
	for (int j = (int)axes_.size() - 1; j >= 0; --j) {
		c[j] = flat % (int)axes_[j].size();
		flat /= (int)axes_[j].size();
	}
	return c;
}

int grade_grid::flat(const std::vector<int>& c) const {
	int f = 0;
	for (size_t j = 0; j < axes_.size(); ++j) f = f * (int)axes_[j].size() + c[j];
	return f;
}

grade grade_grid::point(int flat) const {
	if (!ps_.is_rn()) return grade(flat);
	grade g;
	std::vector<int> c = coords(flat);
	g.coords.reserve(axes_.size());
	for (size_t j = 0; j < axes_.size(); ++j) g.coords.push_back(axes_[j][c[j]]);
	return g;
}

namespace {

// canonical component labels of the sublevel graph at r: vertices get the
// label of their component, numbered by first alive vertex in input order
std::pair<std::vector<int>, int> components_with_labels(const filtered_graph& g, const grade& r) {
	partition uf((int)g.vertices.size());
	std::vector<char> alive(g.vertices.size(), 0);
	for (int v = 0; v < (int)g.vertices.size(); ++v)
		if (g.ps.leq(g.vertices[v].g, r)) alive[v] = 1;
	for (const fg_edge& e : g.edges)
		if (g.ps.leq(e.g, r)) uf.unite(e.u, e.v);
	std::vector<int> label(g.vertices.size(), -1);
	std::vector<int> root_label(g.vertices.size(), -1);
	int next = 0;
	for (int v = 0; v < (int)g.vertices.size(); ++v) {
		if (!alive[v]) continue;
		int root = uf.find(v);
		if (root_label[root] < 0) root_label[root] = next++;
		label[v] = root_label[root];
	}
	return {std::move(label), next};
}

} // namespace

module_snapshot snapshot_module(const filtered_graph& g, const grade_grid& grid) {
	size_t cells = (size_t)grid.points() * (g.vertices.size() + 1);
	if (cells > (1ull << 26)) throw resource_error("module snapshot would be too large");
	module_snapshot snap;
	snap.dim.resize(grid.points());
	snap.label.resize(grid.points());
	for (int a = 0; a < grid.points(); ++a) {
		auto [label, count] = components_with_labels(g, grid.point(a));
		snap.label[a] = std::move(label);
		snap.dim[a] = count;
	}
	if (!grid.ps().is_rn()) return snap;

	snap.up.resize(grid.points());
	for (int a = 0; a < grid.points(); ++a) {
		std::vector<int> c = grid.coords(a);
		snap.up[a].resize(grid.arity());
		for (int j = 0; j < grid.arity(); ++j) {
			if (c[j] + 1 >= (int)grid.axis(j).size()) continue;
			c[j] += 1;
			int b = grid.flat(c);
			c[j] -= 1;
			auto& map = snap.up[a][j];
			map.assign(snap.dim[a], -1);
			for (int v = 0; v < (int)g.vertices.size(); ++v)
				if (snap.label[a][v] >= 0) map[snap.label[a][v]] = snap.label[b][v];
		}
	}
	return snap;
}

std::vector<int> h0_dimensions(const filtered_graph& g, const grade_grid& grid) {
	std::vector<int> dims(grid.points(), 0);
	for (int a = 0; a < grid.points(); ++a) {
		grade r = grid.point(a);
		partition uf((int)g.vertices.size());
		int alive = 0;
		std::vector<char> in(g.vertices.size(), 0);
		for (int v = 0; v < (int)g.vertices.size(); ++v)
			if (g.ps.leq(g.vertices[v].g, r)) {
				in[v] = 1;
				++alive;
			}
		int merges = 0;
		for (const fg_edge& e : g.edges)
			if (g.ps.leq(e.g, r) && uf.unite(e.u, e.v)) ++merges;
		dims[a] = alive - merges;
	}
	return dims;
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
	if (m.empty() || m[0].empty()) return 0;
	int rows = (int)m.size(), cols = (int)m[0].size();
	for (auto& row : m)
		for (auto& x : row) {
			x %= p;
			if (x < 0) x += p;
		}
	int rank = 0;
	for (int c = 0; c < cols && rank < rows; ++c) {
		int piv = -1;
		for (int r = rank; r < rows; ++r)
			if (m[r][c]) {
				piv = r;
				break;
			}
		if (piv < 0) continue;
		std::swap(m[rank], m[piv]);
		int inv = 1;
		while (m[rank][c] * inv % p != 1) ++inv;
		for (int k = c; k < cols; ++k) m[rank][k] = m[rank][k] * inv % p;
		for (int r = rank + 1; r < rows; ++r) {
			if (!m[r][c]) continue;
			int f = p - m[r][c];
			for (int k = c; k < cols; ++k) m[r][k] = (m[r][k] + f * m[rank][k]) % p;
		}
		++rank;
	}
	return rank;
}

namespace {

void require_koszul_input(const filtered_graph& g) {
	if (!g.ps.is_rn()) throw poset_error("koszul oracle supports rn gradings only");
	if (g.ps.arity() > 3) throw resource_error("koszul oracle supports at most 3 parameters");
	if (g.ps.arity() < 1) throw poset_error("koszul oracle needs at least 1 parameter");
}

// subsets of {0..n-1} of size k, as bitmasks in increasing value order
std::vector<unsigned> subsets_of_size(int n, int k) {
	std::vector<unsigned> out;
	for (unsigned s = 0; s < (1u << n); ++s)
		if (__builtin_popcount(s) == k) out.push_back(s);
	return out;
}

struct koszul_term {
	std::vector<unsigned> masks; // summands of K_i in basis order
	std::vector<int> pred;       // flat predecessor point per summand, -1 if off grid
	std::vector<int> offset;     // first row/col of each summand
	int dim = 0;
};

koszul_term build_term(const grade_grid& grid, const module_snapshot& snap,
                       const std::vector<int>& c, int i) {
	koszul_term t;
	t.masks = subsets_of_size(grid.arity(), i);
	for (unsigned s : t.masks) {
		std::vector<int> b = c;
		bool ok = true;
		for (int j = 0; j < grid.arity(); ++j)
			if (s >> j & 1) {
				if (b[j] == 0) {
					ok = false;
					break;
				}
				b[j] -= 1;
			}
		t.pred.push_back(ok ? grid.flat(b) : -1);
		t.offset.push_back(t.dim);
		if (ok) t.dim += snap.dim[grid.flat(b)];
	}
	return t;
}

// differential K_i -> K_{i-1}: drop one axis from the summand mask with an
// alternating sign and push the component one grid step up that axis
std::vector<std::vector<int>> build_differential(const grade_grid& grid,
                                                 const module_snapshot& snap,
                                                 const koszul_term& from, const koszul_term& to) {
	std::vector<std::vector<int>> m(to.dim, std::vector<int>(from.dim, 0));
	for (size_t si = 0; si < from.masks.size(); ++si) {
		if (from.pred[si] < 0) continue;
		unsigned s = from.masks[si];
		int b = from.pred[si];
		int sign = 1;
		for (int j = 0; j < grid.arity(); ++j) {
			if (!(s >> j & 1)) continue;
			unsigned tmask = s & ~(1u << j);
			size_t ti = std::lower_bound(to.masks.begin(), to.masks.end(), tmask) - to.masks.begin();
			const std::vector<int>& up = snap.up[b][j];
			for (int z = 0; z < snap.dim[b]; ++z)
				m[to.offset[ti] + up[z]][from.offset[si] + z] += sign;
			sign = -sign;
		}
	}
	return m;
}

// kernel basis vectors of an integer matrix over F_p, as rows of length cols
std::vector<std::vector<int>> kernel_basis_mod_p(std::vector<std::vector<int>> m, int cols, int p) {
	int rows = (int)m.size();
	for (auto& row : m)
		for (auto& x : row) {
			x %= p;
			if (x < 0) x += p;
		}
	std::vector<int> pivot_col;
	int rank = 0;
	for (int c = 0; c < cols && rank < rows; ++c) {
		int piv = -1;
		for (int r = rank; r < rows; ++r)
			if (m[r][c]) {
				piv = r;
				break;
			}
		if (piv < 0) continue;
		std::swap(m[rank], m[piv]);
		int inv = 1;
		while (m[rank][c] * inv % p != 1) ++inv;
		for (int k = 0; k < cols; ++k) m[rank][k] = m[rank][k] * inv % p;
		for (int r = 0; r < rows; ++r) {
			if (r == rank || !m[r][c]) continue;
			int f = p - m[r][c];
			for (int k = 0; k < cols; ++k) m[r][k] = (m[r][k] + f * m[rank][k]) % p;
		}
		pivot_col.push_back(c);
		++rank;
	}
	std::vector<char> is_pivot(cols, 0);
	for (int c : pivot_col) is_pivot[c] = 1;
	std::vector<std::vector<int>> basis;
	for (int c = 0; c < cols; ++c) {
		if (is_pivot[c]) continue;
		std::vector<int> x(cols, 0);
		x[c] = 1;
		for (int r = 0; r < rank; ++r)
			if (m[r][c]) x[pivot_col[r]] = p - m[r][c];
		basis.push_back(std::move(x));
	}
	return basis;
}

// boundary matrix of the sublevel graph at r, restricted to alive simplices;
// alive_edges receives the edge indices in column order
std::vector<std::vector<int>> boundary_at(const filtered_graph& g, const grade& r,
                                          std::vector<int>& alive_edges) {
	alive_edges.clear();
	for (int e = 0; e < (int)g.edges.size(); ++e)
		if (g.ps.leq(g.edges[e].g, r)) alive_edges.push_back(e);
	std::vector<std::vector<int>> m(g.vertices.size(), std::vector<int>(alive_edges.size(), 0));
	for (size_t c = 0; c < alive_edges.size(); ++c) {
		const fg_edge& e = g.edges[alive_edges[c]];
		if (e.u == e.v) continue;
		m[e.u][c] -= 1;
		m[e.v][c] += 1;
	}
	return m;
}

} // namespace

koszul_report koszul_all(const filtered_graph& g, const grade_grid& grid, int p) {
	require_koszul_input(g);
	module_snapshot snap = snapshot_module(g, grid);
	int n = grid.arity();
	koszul_report rep;
	rep.beta.resize(n + 1);

	for (int a = 0; a < grid.points(); ++a) {
		std::vector<int> c = grid.coords(a);
		std::vector<koszul_term> terms;
		for (int i = 0; i <= n; ++i) terms.push_back(build_term(grid, snap, c, i));
		std::vector<int> rank(n + 2, 0);
		for (int i = 1; i <= n; ++i)
			rank[i] = rank_mod_p(build_differential(grid, snap, terms[i], terms[i - 1]), p);
		for (int i = 0; i <= n; ++i) {
			int betti = terms[i].dim - rank[i] - rank[i + 1];
			for (int k = 0; k < betti; ++k) rep.beta[i].push_back(grid.point(a));
		}
	}

	// beta0 of first homology: kernels of the boundary map, modulo the span of
	// the kernels one grid step down each axis
	for (int a = 0; a < grid.points(); ++a) {
		std::vector<int> alive;
		std::vector<std::vector<int>> bd = boundary_at(g, grid.point(a), alive);
		auto basis = kernel_basis_mod_p(bd, (int)alive.size(), p);
		std::vector<int> col_of(g.edges.size(), -1);
		for (size_t i = 0; i < alive.size(); ++i) col_of[alive[i]] = (int)i;

		std::vector<std::vector<int>> below;
		std::vector<int> c = grid.coords(a);
		for (int j = 0; j < grid.arity(); ++j) {
			if (c[j] == 0) continue;
			c[j] -= 1;
			std::vector<int> palive;
			std::vector<std::vector<int>> pbd = boundary_at(g, grid.point(grid.flat(c)), palive);
			c[j] += 1;
			auto pbasis = kernel_basis_mod_p(std::move(pbd), (int)palive.size(), p);
			for (const auto& v : pbasis) {
				std::vector<int> w(alive.size(), 0);
				for (size_t i = 0; i < palive.size(); ++i) w[col_of[palive[i]]] = v[i];
				below.push_back(std::move(w));
			}
		}
		int betti = (int)basis.size() - rank_mod_p(below, p);
		for (int k = 0; k < betti; ++k) rep.beta0_h1.push_back(grid.point(a));
	}
	return rep;
}

betti_table koszul_betti(const filtered_graph& g, const grade_grid& grid, int i, int p) {
	require_koszul_input(g);
	if (i < 0 || i > grid.arity()) return {};
	return koszul_all(g, grid, p).beta[i];
}

betti_table koszul_betti_h1(const filtered_graph& g, const grade_grid& grid, int p) {
	return koszul_all(g, grid, p).beta0_h1;
}

namespace {

std::vector<std::string> sorted_table(const poset& ps, const betti_table& t) {
	std::vector<std::string> out;
	out.reserve(t.size());
	for (const grade& g : t) out.push_back(ps.grade_str(g));
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

verify_report verify_presentation(const filtered_graph& g, const sparse_presentation& pres,
                                  const grade_grid& grid) {
	std::vector<int> dims = h0_dimensions(g, grid);
	for (int a = 0; a < grid.points(); ++a) {
		grade r = grid.point(a);
		int presented = presented_module_dimension(g.ps, pres, r);
		if (presented != dims[a])
			return {false, "dimension mismatch at grade " + g.ps.grade_str(r) + ": presentation " +
			                   std::to_string(presented) + ", graph " + std::to_string(dims[a])};
	}
	// minimality where the koszul oracle applies: generator and relation
	// grades must match the betti tables exactly
	if (g.ps.is_rn() && g.ps.arity() <= 3) {
		koszul_report rep = koszul_all(g, grid, 2);
		if (sorted_table(g.ps, pres.rows) != sorted_table(g.ps, rep.beta[0]))
			return {false, "presentation is not minimal: generator grades differ from beta0"};
		if (sorted_table(g.ps, pres.cols) != sorted_table(g.ps, rep.beta[1]))
			return {false, "presentation is not minimal: relation grades differ from beta1"};
	}
	return {true, ""};
}

} // namespace fgb
