#pragma once

#include "dendrogram.hpp"
#include "presentation.hpp"

namespace fgb {

// betti tables of zeroth homology of a graph filtered over R^2, plus the
// generator grades of first homology. beta0/beta1/entries form the same
// minimal presentation minimal_presentation() computes.
struct betti_report {
	betti_table beta0;    // generators of H0
	betti_table beta1;    // relations of H0
	betti_table beta2;    // second syzygies of H0
	betti_table beta0_h1; // generators of H1
	std::vector<matrix_entry> entries;
};

// single lexicographic sweep over the vertex-minimized graph with a dynamic
// dendrogram: an edge whose endpoints already merged by its own y is
// deletable and feeds beta0_h1; otherwise it merges its endpoints and emits a
// relation, and a finite previous merge time s additionally emits the second
// syzygy (x, s) and an H1 generator at (x, s).
betti_report betti_r2(const filtered_graph& g, dendro_backend b = dendro_backend::fast);

// minimal witness grade of a cycle-creating edge d: (f_x(d), s) where s is
// the smallest possible maximum y-grade over paths connecting d's endpoints
// through edges strictly before d in the sweep order (lex grade order, ties
// by input index). throws poset_error if d is not cycle-creating.
grade witness_grade(const filtered_graph& g, int d);

} // namespace fgb
