#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace fgb {

// coordinate list of a grade. grades are copied and compared constantly, so
// the common low arities live inline; only arity > 3 goes to the heap.
class coord_vec {
public:
	coord_vec() = default;
	coord_vec(std::initializer_list<scalar> xs) {
		reserve(xs.size());
		for (const scalar& s : xs) push_back(s);
	}
	coord_vec(const coord_vec& o) : n_(o.n_) {
		if (o.spill_) spill_ = std::make_unique<std::vector<scalar>>(*o.spill_);
		else
			for (uint32_t i = 0; i < n_; ++i) inl_[i] = o.inl_[i];
	}
	coord_vec(coord_vec&&) noexcept = default;
	coord_vec& operator=(const coord_vec& o) {
		coord_vec t(o);
		return *this = std::move(t);
	}
	coord_vec& operator=(coord_vec&&) noexcept = default;

	size_t size() const { return spill_ ? spill_->size() : n_; }
	bool empty() const { return size() == 0; }
	void reserve(size_t n) {
		if (n > inline_cap && !spill_) {
			spill_ = std::make_unique<std::vector<scalar>>();
			spill_->reserve(n);
			for (uint32_t i = 0; i < n_; ++i) spill_->push_back(std::move(inl_[i]));
		}
	}
	void push_back(scalar s) {
		if (!spill_ && n_ < inline_cap) {
			inl_[n_++] = std::move(s);
			return;
		}
		reserve(n_ + 1);
		spill_->push_back(std::move(s));
	}
	scalar* data() { return spill_ ? spill_->data() : inl_; }
	const scalar* data() const { return spill_ ? spill_->data() : inl_; }
	scalar& operator[](size_t i) { return data()[i]; }
	const scalar& operator[](size_t i) const { return data()[i]; }
	scalar& back() { return data()[size() - 1]; }
	const scalar& back() const { return data()[size() - 1]; }
	scalar* begin() { return data(); }
	scalar* end() { return data() + size(); }
	const scalar* begin() const { return data(); }
	const scalar* end() const { return data() + size(); }

	bool operator==(const coord_vec& o) const {
		if (size() != o.size()) return false;
		for (size_t i = 0; i < size(); ++i)
			if (!((*this)[i] == o[i])) return false;
		return true;
	}
	bool operator!=(const coord_vec& o) const { return !(*this == o); }

private:
	static constexpr uint32_t inline_cap = 3;
	scalar inl_[inline_cap];
	uint32_t n_ = 0;
	std::unique_ptr<std::vector<scalar>> spill_;
};

// a grade is either a point of R^n (coords used, elem = -1) or an element of
// a finite poset (coords empty). which one is in play is decided by the poset
// descriptor all grades of a computation share.
struct grade {
	coord_vec coords;
	int32_t elem = -1;

	grade() = default;
	explicit grade(coord_vec c) : coords(std::move(c)) {}
	explicit grade(int32_t finite_elem) : elem(finite_elem) {}

	bool operator==(const grade& o) const { return elem == o.elem && coords == o.coords; }
	bool operator!=(const grade& o) const { return !(*this == o); }
};

// finite poset given by its full order relation; rel[i*n+j] != 0 iff i <= j
class finite_poset {
public:
	finite_poset() = default;
	finite_poset(int n, std::vector<uint8_t> rel);

	// reads "poset finite <n>" followed by n rows of n 0/1 entries
	static finite_poset parse(std::istream& in);
	static finite_poset load(const std::string& path);

	int size() const { return n_; }
	bool leq(int a, int b) const { return rel_[(size_t)a * n_ + b] != 0; }

	// least upper bound, or nullopt if a and b have none
	std::optional<int> join(int a, int b) const;

	// poset law violations (reflexivity, antisymmetry, transitivity); empty if valid
	std::vector<std::string> check() const;

private:
	int n_ = 0;
	std::vector<uint8_t> rel_;
};

enum class poset_kind { rn, finite };

// descriptor for the poset grades live in. cheap to copy.
class poset {
public:
	static poset rn(int arity);
	static poset finite(finite_poset fp, std::string source_ref = "");

	poset_kind kind() const { return kind_; }
	bool is_rn() const { return kind_ == poset_kind::rn; }
	int arity() const { return arity_; }
	const finite_poset& fp() const { return *fp_; }

	// the path token a finite poset was loaded from, used when serializing
	const std::string& source_ref() const { return ref_; }

	bool same_as(const poset& o) const;

	// throws descriptor_error if g does not belong to this poset
	void require(const grade& g) const;

	bool leq(const grade& a, const grade& b) const {
		check_shape(a);
		check_shape(b);
		if (kind_ == poset_kind::rn) {
			for (int i = 0; i < arity_; ++i)
				if (!(a.coords[i] <= b.coords[i])) return false;
			return true;
		}
		return fp_->leq(a.elem, b.elem);
	}
	bool less(const grade& a, const grade& b) const { return leq(a, b) && !(a == b); }

	// total lexicographic order refining leq; R^n only
	int lex_compare(const grade& a, const grade& b) const {
		if (kind_ != poset_kind::rn)
			throw descriptor_error("lexicographic order is only defined for R^n grades");
		check_shape(a);
		check_shape(b);
		for (int i = 0; i < arity_; ++i) {
			int c = a.coords[i].compare(b.coords[i]);
			if (c != 0) return c;
		}
		return 0;
	}
	bool lex_less(const grade& a, const grade& b) const { return lex_compare(a, b) < 0; }

	// least upper bound; always exists for R^n, may throw poset_error for
	// finite posets that are not join semilattices
	grade join(const grade& a, const grade& b) const;

	// space separated canonical coordinates, or the element index
	std::string grade_str(const grade& g) const;

private:
	// shape-only subset of require(), cheap enough for comparison paths;
	// coordinate finiteness is already enforced where grades are created
	void check_shape(const grade& g) const {
		bool bad = kind_ == poset_kind::rn
		               ? g.elem != -1 || (int)g.coords.size() != arity_
		               : !g.coords.empty() || g.elem < 0 || g.elem >= fp_->size();
		if (bad) fail_shape();
	}
	[[noreturn]] void fail_shape() const;

	poset_kind kind_ = poset_kind::rn;
	int arity_ = 0;
	std::shared_ptr<const finite_poset> fp_;
	std::string ref_;
};

} // namespace fgb
