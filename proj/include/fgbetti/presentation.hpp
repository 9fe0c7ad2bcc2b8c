#pragma once

#include "collapse.hpp"

namespace fgb {

// one nonzero entry of a presentation matrix; row/col are 1-based
struct matrix_entry {
	int row = 0;
	int col = 0;
	int coeff = 0;

	bool operator==(const matrix_entry& o) const {
		return row == o.row && col == o.col && coeff == o.coeff;
	}
};

// presentation of a persistence module: free module on `rows` modulo the
// column span. every column of a graph presentation has entries -1 and +1 at
// the rows of the edge's endpoints (or none, for a column that was a loop).
struct sparse_presentation {
	betti_table rows; // generator grades (beta0)
	betti_table cols; // relation grades (beta1)
	std::vector<matrix_entry> entries;
};

struct minpres_result {
	sparse_presentation pres;
	filtered_graph graph; // the minimal graph the presentation reads off of
	std::map<std::string, std::string> vertex_map;
};

// minimal presentation of zeroth persistent homology over any poset:
// vertex-minimize, then delete deletable edges one by one. rows are the
// surviving vertices, columns the surviving edges with -1 on the first
// endpoint and +1 on the second.
minpres_result minimal_presentation(const filtered_graph& g);

// dimension at r of the module a presentation presents: generators born by r
// modulo relations born by r, counted by union-find
int presented_module_dimension(const poset& ps, const sparse_presentation& p, const grade& r);

} // namespace fgb
