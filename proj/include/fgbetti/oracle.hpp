#pragma once

#include "presentation.hpp"

namespace fgb {

// finite verification grid. for R^n it is the product of the sorted distinct
// per-axis coordinate values, which contains every grade any betti table of
// the input can mention; for finite posets it is the whole element set.
// points are enumerated lexicographically, last axis fastest.
class grade_grid {
public:
	static grade_grid from_grades(const poset& ps, const std::vector<grade>& grades, int axis_cap = 64);
	static grade_grid from_graph(const filtered_graph& g, int axis_cap = 64);

	const poset& ps() const { return ps_; }
	int points() const { return points_; }
	grade point(int flat) const;

	int arity() const { return (int)axes_.size(); }
	const std::vector<scalar>& axis(int j) const { return axes_[j]; }
	std::vector<int> coords(int flat) const;
	int flat(const std::vector<int>& c) const;

private:
	poset ps_ = poset::rn(1);
	std::vector<std::vector<scalar>> axes_;
	int points_ = 0;
};

// connected components of the sublevel graph at every grid point, with
// canonical labels and the maps induced by one-step grid moves
struct module_snapshot {
	std::vector<int> dim;                     // components per flat point
	std::vector<std::vector<int>> label;      // [flat][vertex], -1 if dead
	std::vector<std::vector<std::vector<int>>> up; // [flat][axis]: label -> label one step up (R^n only)
};
module_snapshot snapshot_module(const filtered_graph& g, const grade_grid& grid);

// number of connected components at every grid point
std::vector<int> h0_dimensions(const filtered_graph& g, const grade_grid& grid);

// rank of an integer matrix over F_p by gaussian elimination
int rank_mod_p(std::vector<std::vector<int>> m, int p);

// all koszul betti tables of zeroth homology (beta[0..n]) and the generator
// grades of first homology, over F_p. R^n with n <= 3 only.
struct koszul_report {
	std::vector<betti_table> beta;
	betti_table beta0_h1;
};
koszul_report koszul_all(const filtered_graph& g, const grade_grid& grid, int p);
betti_table koszul_betti(const filtered_graph& g, const grade_grid& grid, int i, int p);
betti_table koszul_betti_h1(const filtered_graph& g, const grade_grid& grid, int p);

// checks that a presentation presents zeroth homology of g: the presented
// dimension must match the component count at every grid point
struct verify_report {
	bool ok = true;
	std::string reason;
};
verify_report verify_presentation(const filtered_graph& g, const sparse_presentation& pres, const grade_grid& grid);

} // namespace fgb
