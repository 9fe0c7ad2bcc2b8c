#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace fgb {

// exact rational number with +/-infinity sentinels.
// grade coordinates are always finite; the sentinels exist for dendrogram
// labels, where -inf marks leaves and +inf means "never merged".
//
// the representation is two machine words. den_ != 0 means the value is the
// inline fraction num_/den_ (canonical, den_ > 0), compared by 128 bit cross
// multiplication. den_ == 0 marks the rare escapes: num_ == 1 is +inf,
// num_ == -1 is -inf, and any other num_ is a pointer to a refcounted mpq
// for values too large to fit machine words. the common case never touches
// the heap, which matters a lot for the millions of labels a large
// dendrogram carries.
class scalar {
public:
	scalar() = default;
	scalar(long v) : num_(v), den_(1) {}
	scalar(int v) : num_(v), den_(1) {}
	explicit scalar(const mpq_class& q);

	scalar(const scalar& o) : num_(o.num_), den_(o.den_) { retain(); }
	scalar(scalar&& o) noexcept : num_(o.num_), den_(o.den_) {
		o.num_ = 0;
		o.den_ = 1;
	}
	scalar& operator=(const scalar& o) {
		scalar t(o);
		std::swap(num_, t.num_);
		std::swap(den_, t.den_);
		return *this;
	}
	scalar& operator=(scalar&& o) noexcept {
		std::swap(num_, o.num_);
		std::swap(den_, o.den_);
		return *this;
	}
	~scalar() { release(); }

	static scalar pos_inf() { return scalar(1L, 0); }
	static scalar neg_inf() { return scalar(-1L, 0); }

	// accepts decimal tokens ("5", "-1.25", "0.5") and "inf"/"+inf"/"-inf"
	static scalar parse(std::string_view tok);

	bool is_finite() const { return den_ != 0 || is_big(); }
	bool is_pos_inf() const { return den_ == 0 && num_ == 1; }
	bool is_neg_inf() const { return den_ == 0 && num_ == -1; }

	// value as an exact canonical rational; only valid for finite scalars
	mpq_class rational() const;

	int compare(const scalar& o) const {
		if (den_ != 0 && o.den_ != 0) {
			__int128 l = (__int128)num_ * (__int128)o.den_;
			__int128 r = (__int128)o.num_ * (__int128)den_;
			return l < r ? -1 : l > r ? 1 : 0;
		}
		return compare_slow(o);
	}

	bool operator==(const scalar& o) const { return compare(o) == 0; }
	bool operator!=(const scalar& o) const { return compare(o) != 0; }
	bool operator<(const scalar& o) const { return compare(o) < 0; }
	bool operator<=(const scalar& o) const { return compare(o) <= 0; }
	bool operator>(const scalar& o) const { return compare(o) > 0; }
	bool operator>=(const scalar& o) const { return compare(o) >= 0; }

	// canonical decimal rendering: no exponent, no trailing fraction zeros,
	// integers without a decimal point. falls back to "p/q" for denominators
	// that have no finite decimal expansion (cannot arise from parsed input).
	std::string str() const;

private:
	struct big_box {
		std::atomic<long> rc{1};
		mpq_class q;
		explicit big_box(mpq_class v) : q(std::move(v)) {}
	};

	scalar(long n, unsigned long d) : num_(n), den_(d) {}

	bool is_big() const { return den_ == 0 && num_ != 1 && num_ != -1; }
	big_box* box() const { return reinterpret_cast<big_box*>(static_cast<intptr_t>(num_)); }
	void retain() {
		if (is_big()) box()->rc.fetch_add(1, std::memory_order_relaxed);
	}
	void release() {
		if (is_big() && box()->rc.fetch_sub(1, std::memory_order_acq_rel) == 1) delete box();
	}

	// -1 below all finite values, 0 finite, 1 above; big values are finite
	int rank() const { return den_ != 0 || is_big() ? 0 : (int)num_; }
	int compare_slow(const scalar& o) const;

	long num_ = 0;
	unsigned long den_ = 1;
};

inline const scalar& max(const scalar& a, const scalar& b) { return a < b ? b : a; }
inline const scalar& min(const scalar& a, const scalar& b) { return b < a ? b : a; }

} // namespace fgb
