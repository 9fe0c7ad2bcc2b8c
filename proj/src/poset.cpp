#include "fgbetti/poset.hpp"

#include <fstream>
#include <sstream>

namespace fgb {

finite_poset::finite_poset(int n, std::vector<uint8_t> rel) : n_(n), rel_(std::move(rel)) {
	if (n < 0 || rel_.size() != (size_t)n * n)
		throw poset_error("finite poset relation has wrong size");
	auto bad = check();
	if (!bad.empty()) throw poset_error("invalid finite poset: " + bad.front());
}

finite_poset finite_poset::parse(std::istream& in) {
	std::string word;
	if (!(in >> word) || word != "poset") throw parse_error("finite poset file must start with 'poset finite <n>'");
	if (!(in >> word) || word != "finite") throw parse_error("finite poset file must start with 'poset finite <n>'");
	long n;
	if (!(in >> n) || n < 0) throw parse_error("bad element count in finite poset file");
	std::vector<uint8_t> rel((size_t)n * n);
	for (size_t k = 0; k < rel.size(); ++k) {
		int v;
		if (!(in >> v) || (v != 0 && v != 1))
			throw parse_error("finite poset relation must be a " + std::to_string(n) + "x" + std::to_string(n) + " 0/1 matrix");
		rel[k] = (uint8_t)v;
	}
	return finite_poset((int)n, std::move(rel));
}

finite_poset finite_poset::load(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw io_error("cannot open finite poset file '" + path + "'");
	return parse(in);
}

std::optional<int> finite_poset::join(int a, int b) const {
	for (int c = 0; c < n_; ++c) {
		if (!leq(a, c) || !leq(b, c)) continue;
		// c is a common upper bound; it is the join iff it sits below all others
		bool least = true;
		for (int d = 0; d < n_ && least; ++d)
			if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
		if (least) return c;
	}
	return std::nullopt;
}

std::vector<std::string> finite_poset::check() const {
	std::vector<std::string> bad;
	for (int i = 0; i < n_; ++i)
		if (!leq(i, i)) bad.push_back("not reflexive at " + std::to_string(i));
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			if (i != j && leq(i, j) && leq(j, i))
				bad.push_back("antisymmetry violated by " + std::to_string(i) + " and " + std::to_string(j));
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j) {
			if (!leq(i, j)) continue;
			for (int k = 0; k < n_; ++k)
				if (leq(j, k) && !leq(i, k))
					bad.push_back("transitivity violated by " + std::to_string(i) + " <= " + std::to_string(j) + " <= " + std::to_string(k));
		}
	return bad;
}

poset poset::rn(int arity) {
	if (arity < 1) throw poset_error("R^n poset needs arity >= 1");
	poset p;
	p.kind_ = poset_kind::rn;
	p.arity_ = arity;
	return p;
}

poset poset::finite(finite_poset fp, std::string source_ref) {
	poset p;
	p.kind_ = poset_kind::finite;
	p.fp_ = std::make_shared<const finite_poset>(std::move(fp));
	p.ref_ = std::move(source_ref);
	return p;
}

bool poset::same_as(const poset& o) const {
	if (kind_ != o.kind_) return false;
	if (kind_ == poset_kind::rn) return arity_ == o.arity_;
	if (fp_ == o.fp_) return true;
	if (fp_->size() != o.fp_->size()) return false;
	for (int i = 0; i < fp_->size(); ++i)
		for (int j = 0; j < fp_->size(); ++j)
			if (fp_->leq(i, j) != o.fp_->leq(i, j)) return false;
	return true;
}

void poset::require(const grade& g) const {
	check_shape(g);
	if (kind_ == poset_kind::rn)
		for (const scalar& s : g.coords)
			if (!s.is_finite()) throw descriptor_error("grade coordinates must be finite");
}

void poset::fail_shape() const {
	if (kind_ == poset_kind::rn)
		throw descriptor_error("grade does not match R^" + std::to_string(arity_) + " descriptor");
	throw descriptor_error("grade does not match finite poset descriptor with " +
	                       std::to_string(fp_->size()) + " elements");
}

grade poset::join(const grade& a, const grade& b) const {
	check_shape(a);
	check_shape(b);
	if (kind_ == poset_kind::rn) {
		grade g;
		g.coords.reserve(arity_);
		for (int i = 0; i < arity_; ++i) g.coords.push_back(max(a.coords[i], b.coords[i]));
		return g;
	}
	auto j = fp_->join(a.elem, b.elem);
	if (!j) throw poset_error("elements " + std::to_string(a.elem) + " and " + std::to_string(b.elem) + " have no join");
	return grade(*j);
}

std::string poset::grade_str(const grade& g) const {
	check_shape(g);
	if (kind_ == poset_kind::finite) return std::to_string(g.elem);
	std::string out;
	for (int i = 0; i < arity_; ++i) {
		if (i) out += ' ';
		out += g.coords[i].str();
	}
	return out;
}

} // namespace fgb
