#pragma once

#include <memory>
#include <string>

#include "scalar.hpp"

namespace fgb {

enum class dendro_backend { fast, naive };

// dynamic dendrogram over a fixed set of leaves 0..n-1. time_of_merge(v, w)
// is the earliest time the two leaves are connected (-inf for v == w, +inf if
// never), and merge_at_time(v, w, t) adds the constraint that they merge at
// time t, lowering time_of_merge(v, w) to at most t. internally a forest of
// heap-ordered trees: labels never decrease toward the root, leaves sit at
// -inf, and time_of_merge is the label of the nearest common ancestor.
//
// the fast backend runs on link-cut trees (amortized polylog per operation),
// the naive one walks parent chains. both produce identical answers.
class dynamic_dendrogram {
public:
	explicit dynamic_dendrogram(int leaves, dendro_backend b = dendro_backend::fast);
	~dynamic_dendrogram();
	dynamic_dendrogram(dynamic_dendrogram&&) noexcept;
	dynamic_dendrogram& operator=(dynamic_dendrogram&&) noexcept;

	int leaves() const;
	int nodes() const; // leaves plus merge nodes, dump() order

	// non-const: the fast backend restructures itself on queries
	scalar time_of_merge(int v, int w);

	// t must not be +inf; v == w is a no-op as far as queries are concerned
	void merge_at_time(int v, int w, const scalar& t);

	// one node per line: "<node> <parent|-> <label>"
	std::string dump() const;

	// full scan of the heap invariant (labels non-decreasing toward roots)
	bool check_heap_order() const;

	struct impl;

private:
	std::unique_ptr<impl> impl_;
};

} // namespace fgb
