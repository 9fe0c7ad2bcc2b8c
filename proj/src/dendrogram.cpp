#include "fgbetti/dendrogram.hpp"

#include <stdexcept>
#include <vector>

namespace fgb {

struct dynamic_dendrogram::impl {
	int leaf_count = 0;
	virtual ~impl() = default;
	virtual scalar tom(int v, int w) = 0;
	virtual void merge(int v, int w, const scalar& t) = 0;
	virtual int nodes() const = 0;
	virtual int parent_of(int v) const = 0; // -1 for roots
	virtual const scalar& label_of(int v) const = 0;

	void check_ids(int v, int w) const {
		if (v < 0 || w < 0 || v >= nodes() || w >= nodes())
			throw std::out_of_range("dendrogram node index out of range");
	}
};

namespace {

// reference backend: plain parent pointers, everything by walking root paths
struct naive_impl : dynamic_dendrogram::impl {
	std::vector<int> parent;
	std::vector<scalar> label;

	explicit naive_impl(int n) {
		leaf_count = n;
		parent.assign(n, -1);
		label.assign(n, scalar::neg_inf());
	}

	int nodes() const override { return (int)parent.size(); }
	int parent_of(int v) const override { return parent[v]; }
	const scalar& label_of(int v) const override { return label[v]; }

	std::vector<int> root_path(int v) const {
		std::vector<int> path;
		for (; v != -1; v = parent[v]) path.push_back(v);
		return path;
	}

	scalar tom(int v, int w) override {
		check_ids(v, w);
		if (v == w) return label[v];
		auto pv = root_path(v), pw = root_path(w);
		if (pv.back() != pw.back()) return scalar::pos_inf();
		size_t k = 1;
		while (k < pv.size() && k < pw.size() && pv[pv.size() - 1 - k] == pw[pw.size() - 1 - k]) ++k;
		return label[pv[pv.size() - k]];
	}

	// re-chain the union of two disjoint sorted chains below `top`;
	// ties take from a first, so the first argument's nodes sit deeper
	void interleave(const std::vector<int>& a, const std::vector<int>& b, int top) {
		std::vector<int> merged;
		merged.reserve(a.size() + b.size());
		size_t i = 0, j = 0;
		while (i < a.size() && j < b.size())
			merged.push_back(label[a[i]] <= label[b[j]] ? a[i++] : b[j++]);
		while (i < a.size()) merged.push_back(a[i++]);
		while (j < b.size()) merged.push_back(b[j++]);
		for (size_t k = 0; k + 1 < merged.size(); ++k) parent[merged[k]] = merged[k + 1];
		if (!merged.empty()) parent[merged.back()] = top;
	}

	// mergeable-trees merge: interleave the root paths of a and b
	void merge_paths(int a, int b) {
		auto pa = root_path(a), pb = root_path(b);
		if (pa.back() != pb.back()) {
			interleave(pa, pb, -1);
			return;
		}
		size_t k = 0;
		while (k < pa.size() && k < pb.size() && pa[pa.size() - 1 - k] == pb[pb.size() - 1 - k]) ++k;
		int c = pa[pa.size() - k];
		if (c == a || c == b) return; // one path contains the other
		pa.resize(pa.size() - k);
		pb.resize(pb.size() - k);
		interleave(pa, pb, c);
	}

	void merge(int v, int w, const scalar& t) override {
		check_ids(v, w);
		int h = nodes();
		parent.push_back(-1);
		label.push_back(t);
		merge_paths(v, h);
		merge_paths(w, h);
	}
};

// link-cut tree backend. preferred paths are splay trees ordered root-first,
// so in-order labels never increase and a plain descent finds the topmost
// path node under a bound without subtree aggregates. no evert is ever
// needed: merges only re-hang chains upward.
struct lct_impl : dynamic_dendrogram::impl {
	// internal ids are 1-based; 0 is the null sentinel
	struct node {
		int ch[2] = {0, 0};
		int p = 0;  // splay parent
		int pp = 0; // path parent of a splay root
		int rp = 0; // represented tree parent, for dump and heap checks
		scalar lab;
	};
	std::vector<node> nd;

	explicit lct_impl(int n) {
		leaf_count = n;
		nd.resize(n + 1);
		for (int i = 1; i <= n; ++i) nd[i].lab = scalar::neg_inf();
	}

	int nodes() const override { return (int)nd.size() - 1; }
	int parent_of(int v) const override { return nd[v + 1].rp - 1; }
	const scalar& label_of(int v) const override { return nd[v + 1].lab; }

	bool is_splay_root(int x) const { return nd[x].p == 0; }

	void rot(int x) {
		int y = nd[x].p, z = nd[y].p;
		int dir = nd[y].ch[1] == x;
		int b = nd[x].ch[!dir];
		nd[y].ch[dir] = b;
		if (b) nd[b].p = y;
		nd[x].ch[!dir] = y;
		nd[y].p = x;
		nd[x].p = z;
		if (z) nd[z].ch[nd[z].ch[1] == y] = x;
		else {
			nd[x].pp = nd[y].pp;
			nd[y].pp = 0;
		}
	}

	void splay(int x) {
		while (!is_splay_root(x)) {
			int y = nd[x].p, z = nd[y].p;
			if (z) {
				if ((nd[z].ch[1] == y) == (nd[y].ch[1] == x)) rot(y);
				else rot(x);
			}
			rot(x);
		}
	}

	void detach_deep(int x) {
		if (int r = nd[x].ch[1]) {
			nd[r].p = 0;
			nd[r].pp = x;
			nd[x].ch[1] = 0;
		}
	}

	// make the path from the represented root to x preferred; returns the
	// root of the last path hopped into, the nearest common ancestor when
	// called as the second of two accesses
	int access(int x) {
		splay(x);
		detach_deep(x);
		int last = x;
		while (nd[x].pp) {
			int y = nd[x].pp;
			last = y;
			splay(y);
			detach_deep(y);
			nd[y].ch[1] = x;
			nd[x].p = y;
			nd[x].pp = 0;
			splay(x);
		}
		return last;
	}

	int find_root(int x) {
		access(x);
		while (nd[x].ch[0]) x = nd[x].ch[0];
		splay(x);
		return x;
	}

	// detach x from its represented parent
	void cut_parent(int x) {
		access(x);
		int l = nd[x].ch[0];
		if (l) {
			nd[l].p = 0;
			nd[l].pp = 0;
			nd[x].ch[0] = 0;
		}
		nd[x].rp = 0;
	}

	// attach the represented root x below w
	void link_root(int x, int w) {
		access(x);
		access(w);
		nd[x].ch[0] = w;
		nd[w].p = x;
		nd[x].rp = w;
	}

	// topmost ancestor-or-self of x with label <= bound; x's label must obey
	// the bound. after access the splay tree holds exactly x's root path in
	// root-first order, so the qualifying nodes form an in-order suffix.
	int topmost_leq(int x, const scalar& bound) {
		access(x);
		int best = 0, cur = x;
		while (cur) {
			if (nd[cur].lab <= bound) {
				best = cur;
				cur = nd[cur].ch[0];
			} else cur = nd[cur].ch[1];
		}
		splay(best);
		return best;
	}

	// represented child of the strict ancestor c on the path toward t
	int child_toward(int c, int t) {
		access(t);
		splay(c);
		int m = nd[c].ch[1];
		while (nd[m].ch[0]) m = nd[m].ch[0];
		splay(m);
		return m;
	}

	// interleave the root paths of a and b, which sit in different trees.
	// block by block: the lower chain's topmost prefix under the other
	// chain's bottom label is cut loose and hung below that bottom node.
	void zip(int a, int b) {
		if (nd[a].lab > nd[b].lab) std::swap(a, b);
		while (true) {
			int u = topmost_leq(a, nd[b].lab);
			int pa = nd[u].rp;
			if (pa) cut_parent(u);
			link_root(u, b);
			if (!pa) return;
			a = b;
			b = pa;
		}
	}

	void merge_paths(int x, int y) {
		if (find_root(x) != find_root(y)) {
			zip(x, y);
			return;
		}
		access(x);
		int c = access(y);
		if (c == x || c == y) return; // one path contains the other
		int ux = child_toward(c, x);
		int uy = child_toward(c, y);
		cut_parent(ux);
		cut_parent(uy);
		zip(x, y);
		link_root(find_root(x), c);
	}

	scalar tom(int v, int w) override {
		check_ids(v, w);
		int x = v + 1, y = w + 1;
		if (x == y) return nd[x].lab;
		if (find_root(x) != find_root(y)) return scalar::pos_inf();
		access(x);
		return nd[access(y)].lab;
	}

	void merge(int v, int w, const scalar& t) override {
		check_ids(v, w);
		nd.push_back(node{});
		int h = (int)nd.size() - 1;
		nd[h].lab = t;
		merge_paths(v + 1, h);
		merge_paths(w + 1, h);
	}
};

} // namespace

dynamic_dendrogram::dynamic_dendrogram(int leaves, dendro_backend b) {
	if (leaves < 0) throw std::invalid_argument("leaf count must be non-negative");
	if (b == dendro_backend::fast) impl_ = std::make_unique<lct_impl>(leaves);
	else impl_ = std::make_unique<naive_impl>(leaves);
}

dynamic_dendrogram::~dynamic_dendrogram() = default;
dynamic_dendrogram::dynamic_dendrogram(dynamic_dendrogram&&) noexcept = default;
dynamic_dendrogram& dynamic_dendrogram::operator=(dynamic_dendrogram&&) noexcept = default;

int dynamic_dendrogram::leaves() const { return impl_->leaf_count; }
int dynamic_dendrogram::nodes() const { return impl_->nodes(); }

scalar dynamic_dendrogram::time_of_merge(int v, int w) { return impl_->tom(v, w); }

void dynamic_dendrogram::merge_at_time(int v, int w, const scalar& t) {
	if (t.is_pos_inf()) throw std::invalid_argument("merge time must be below +inf");
	impl_->merge(v, w, t);
}

std::string dynamic_dendrogram::dump() const {
	std::string out;
	for (int v = 0; v < impl_->nodes(); ++v) {
		int p = impl_->parent_of(v);
		out += std::to_string(v);
		out += ' ';
		out += p < 0 ? "-" : std::to_string(p);
		out += ' ';
		out += impl_->label_of(v).str();
		out += '\n';
	}
	return out;
}

bool dynamic_dendrogram::check_heap_order() const {
	for (int v = 0; v < impl_->nodes(); ++v) {
		int p = impl_->parent_of(v);
		if (p >= 0 && !(impl_->label_of(v) <= impl_->label_of(p))) return false;
	}
	return true;
}

} // namespace fgb
