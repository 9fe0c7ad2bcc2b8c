#include "fgbetti/scalar.hpp"

#include <algorithm>

namespace fgb {

scalar::scalar(const mpq_class& q) : num_(0), den_(1) {
	mpq_class c = q;
	c.canonicalize();
	if (mpz_fits_slong_p(c.get_num().get_mpz_t()) != 0 &&
	    mpz_fits_ulong_p(c.get_den().get_mpz_t()) != 0) {
		num_ = mpz_get_si(c.get_num().get_mpz_t());
		den_ = mpz_get_ui(c.get_den().get_mpz_t());
	} else {
		num_ = static_cast<long>(reinterpret_cast<intptr_t>(new big_box(std::move(c))));
		den_ = 0;
	}
}

mpq_class scalar::rational() const {
	if (is_big()) return box()->q;
	mpq_class q(num_);
	q /= den_;
	return q;
}

int scalar::compare_slow(const scalar& o) const {
	int lr = rank(), rr = o.rank();
	if (lr != rr) return lr < rr ? -1 : 1;
	if (lr != 0) return 0;
	int c = (is_big() && o.is_big()) ? cmp(box()->q, o.box()->q) : cmp(rational(), o.rational());
	return c < 0 ? -1 : c > 0 ? 1 : 0;
}

scalar scalar::parse(std::string_view tok) {
	if (tok == "inf" || tok == "+inf") return pos_inf();
	if (tok == "-inf") return neg_inf();

	size_t i = 0;
	bool neg = false;
	if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
		neg = tok[i] == '-';
		++i;
	}
	std::string digits;
	digits.reserve(tok.size());
	size_t frac_len = 0;
	bool seen_dot = false, seen_digit = false;
	for (; i < tok.size(); ++i) {
		char c = tok[i];
		if (c == '.') {
			if (seen_dot) throw parse_error("bad scalar token '" + std::string(tok) + "'");
			seen_dot = true;
			continue;
		}
		if (c < '0' || c > '9') throw parse_error("bad scalar token '" + std::string(tok) + "'");
		digits.push_back(c);
		if (seen_dot) ++frac_len;
		seen_digit = true;
	}
	if (!seen_digit) throw parse_error("bad scalar token '" + std::string(tok) + "'");

	mpz_class num(digits, 10);
	mpz_class den;
	mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
	mpq_class q(num, den);
	q.canonicalize();
	if (neg) q = -q;
	return scalar(q);
}

std::string scalar::str() const {
	if (is_pos_inf()) return "inf";
	if (is_neg_inf()) return "-inf";

	mpq_class q = rational();
	mpz_class num = q.get_num();
	const mpz_class& den = q.get_den();
	if (den == 1) return num.get_str();

	// a canonical fraction has a finite decimal expansion iff den = 2^a 5^b
	mpz_class d = den;
	unsigned long a = 0, b = 0;
	while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
		mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
		++a;
	}
	while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
		mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
		++b;
	}
	if (d != 1) return num.get_str() + "/" + den.get_str();

	unsigned long k = std::max(a, b);
	mpz_class scale;
	mpz_ui_pow_ui(scale.get_mpz_t(), 2, k - a);
	num *= scale;
	mpz_ui_pow_ui(scale.get_mpz_t(), 5, k - b);
	num *= scale;

	bool neg = num < 0;
	std::string ds = mpz_class(abs(num)).get_str();
	if (ds.size() <= k) ds.insert(0, k + 1 - ds.size(), '0');
	std::string head = ds.substr(0, ds.size() - k);
	std::string tail = ds.substr(ds.size() - k);
	while (!tail.empty() && tail.back() == '0') tail.pop_back();
	std::string out = neg ? "-" : "";
	out += head;
	if (!tail.empty()) {
		out += '.';
		out += tail;
	}
	return out;
}

} // namespace fgb
