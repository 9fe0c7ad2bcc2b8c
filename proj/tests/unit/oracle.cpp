#include <doctest.h>

#include <random>

#include "fgbetti/bench.hpp"
#include "fgbetti/oracle.hpp"
#include "support/linalg_oracle.hpp"
#include "support/test_graphs.hpp"

using namespace fgb;
using namespace fgbtest;

TEST_CASE("grade grid from a bifiltered graph") {
	filtered_graph g = two_generator_square();
	grade_grid grid = grade_grid::from_graph(g);
	CHECK(grid.arity() == 2);
	CHECK(grid.points() == 4);
	REQUIRE(grid.axis(0).size() == 2);
	REQUIRE(grid.axis(1).size() == 2);
	CHECK(grid.axis(0)[0] == scalar(0));
	CHECK(grid.axis(0)[1] == scalar(1));
	CHECK(grid.axis(1)[0] == scalar(0));
	CHECK(grid.axis(1)[1] == scalar(1));

	// last axis varies fastest
	CHECK(g.ps.grade_str(grid.point(0)) == "0 0");
	CHECK(g.ps.grade_str(grid.point(1)) == "0 1");
	CHECK(g.ps.grade_str(grid.point(2)) == "1 0");
	CHECK(g.ps.grade_str(grid.point(3)) == "1 1");

	for (int a = 0; a < grid.points(); ++a) CHECK(grid.flat(grid.coords(a)) == a);
}

TEST_CASE("grade grid deduplicates per axis values") {
	poset ps = poset::rn(2);
	std::vector<grade> grades = {gr(0, 5), gr(3, 5), gr(0, 7), gr(3, 7), gr(3, 5)};
	grade_grid grid = grade_grid::from_grades(ps, grades);
	CHECK(grid.points() == 4);
	REQUIRE(grid.axis(0).size() == 2);
	CHECK(grid.axis(0)[1] == scalar(3));
	CHECK(grid.axis(1)[0] == scalar(5));
}

TEST_CASE("grade grid axis cap") {
	poset ps = poset::rn(2);
	std::vector<grade> grades;
	for (long i = 0; i < 70; ++i) grades.push_back(gr(i, 0));
	CHECK_THROWS_AS(grade_grid::from_grades(ps, grades), resource_error);
	CHECK_NOTHROW(grade_grid::from_grades(ps, grades, 128));
	std::vector<grade> few = {gr(0, 0), gr(1, 1), gr(2, 2)};
	CHECK_THROWS_AS(grade_grid::from_grades(ps, few, 2), resource_error);
}

TEST_CASE("grade grid over a finite poset is the whole element set") {
	// diamond lattice 0 < {1, 2} < 3
	std::vector<uint8_t> rel = {
	    1, 1, 1, 1, //
	    0, 1, 0, 1, //
	    0, 0, 1, 1, //
	    0, 0, 0, 1, //
	};
	finite_poset fp(4, rel);
	poset ps = poset::finite(fp);
	filtered_graph g;
	g.ps = ps;
	g.add_vertex("a", grade(0));
	g.add_vertex("b", grade(2));
	g.add_edge("ab", 0, 1, grade(3));
	grade_grid grid = grade_grid::from_graph(g);
	CHECK(grid.points() == 4);
	for (int a = 0; a < 4; ++a) CHECK(grid.point(a).elem == a);
}

TEST_CASE("rank over small prime fields") {
	CHECK(rank_mod_p({{2}}, 2) == 0);
	CHECK(rank_mod_p({{2}}, 3) == 1);
	CHECK(rank_mod_p({{3}}, 3) == 0);
	CHECK(rank_mod_p({{3}}, 5) == 1);
	CHECK(rank_mod_p({{1, 1}, {1, 1}}, 2) == 1);
	CHECK(rank_mod_p({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2) == 3);
	CHECK(rank_mod_p({{-1, 1}, {1, -1}}, 5) == 1);
	CHECK(rank_mod_p({{0, 0}, {0, 0}}, 2) == 0);
	CHECK(rank_mod_p({}, 2) == 0);
	CHECK(rank_mod_p({{1, 2}, {2, 4}}, 5) == 1);
	CHECK(rank_mod_p({{1, 2}, {2, 4}}, 3) == 1);
	// {{1,2},{2,1}} is singular mod 3 (det = -3) but not mod 5
	CHECK(rank_mod_p({{1, 2}, {2, 1}}, 3) == 1);
	CHECK(rank_mod_p({{1, 2}, {2, 1}}, 5) == 2);
}

TEST_CASE("row and column elimination agree on random matrices") {
	std::mt19937_64 rng(7);
	for (int rep = 0; rep < 60; ++rep) {
		int rows = 1 + (int)(rng() % 8), cols = 1 + (int)(rng() % 8);
		std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
		for (auto& row : m)
			for (int& x : row) x = (int)(rng() % 7) - 3;
		for (int p : {2, 3, 5}) CHECK(rank_mod_p(m, p) == column_rank_mod_p(m, p));
	}
}

TEST_CASE("component counts across the grid") {
	filtered_graph g = two_generator_square();
	grade_grid grid = grade_grid::from_graph(g);
	std::vector<int> dims = h0_dimensions(g, grid);
	CHECK(dims == std::vector<int>{2, 1, 1, 1});
	for (int a = 0; a < grid.points(); ++a) CHECK(dims[a] == bfs_components_at(g, grid.point(a)));
}

TEST_CASE("module snapshot carries functorial component maps") {
	bench_config cfg;
	cfg.seed = 99;
	cfg.vertices = 14;
	cfg.edges = 25;
	cfg.grid = 5;
	filtered_graph g = random_graph(cfg);
	grade_grid grid = grade_grid::from_graph(g);
	module_snapshot snap = snapshot_module(g, grid);

	for (int a = 0; a < grid.points(); ++a) {
		// labels are a bijection onto 0..dim-1 over alive vertices
		std::vector<char> seen(snap.dim[a], 0);
		for (int v = 0; v < (int)g.vertices.size(); ++v) {
			int l = snap.label[a][v];
			CHECK(l < snap.dim[a]);
			if (l >= 0) seen[l] = 1;
		}
		for (char s : seen) CHECK(s == 1);

		std::vector<int> c = grid.coords(a);
		for (int j = 0; j < grid.arity(); ++j) {
			if (c[j] + 1 >= (int)grid.axis(j).size()) {
				CHECK(snap.up[a][j].empty());
				continue;
			}
			c[j] += 1;
			int b = grid.flat(c);
			c[j] -= 1;
			REQUIRE((int)snap.up[a][j].size() == snap.dim[a]);
			for (int l : snap.up[a][j]) {
				CHECK(l >= 0);
				CHECK(l < snap.dim[b]);
			}
		}

		// one step up axis 0 then axis 1 equals axis 1 then axis 0
		if (grid.arity() == 2 && c[0] + 1 < (int)grid.axis(0).size() &&
		    c[1] + 1 < (int)grid.axis(1).size()) {
			int right = grid.flat({c[0] + 1, c[1]});
			int up = grid.flat({c[0], c[1] + 1});
			for (int l = 0; l < snap.dim[a]; ++l)
				CHECK(snap.up[right][1][snap.up[a][0][l]] == snap.up[up][0][snap.up[a][1][l]]);
		}
	}
}

TEST_CASE("koszul betti tables of the two generator square") {
	filtered_graph g = two_generator_square();
	grade_grid grid = grade_grid::from_graph(g);
	for (int p : {2, 3}) {
		koszul_report rep = koszul_all(g, grid, p);
		REQUIRE(rep.beta.size() == 3);
		CHECK(table_multiset(g.ps, rep.beta[0]) == std::multiset<std::string>{"0 0", "0 0"});
		CHECK(table_multiset(g.ps, rep.beta[1]) == std::multiset<std::string>{"0 1", "1 0"});
		CHECK(table_multiset(g.ps, rep.beta[2]) == std::multiset<std::string>{"1 1"});
		CHECK(table_multiset(g.ps, rep.beta0_h1) == std::multiset<std::string>{"1 1"});
	}
	CHECK(koszul_betti(g, grid, 0, 2).size() == 2);
	CHECK(koszul_betti(g, grid, 3, 2).empty());
	CHECK(koszul_betti(g, grid, -1, 2).empty());
	CHECK(koszul_betti_h1(g, grid, 5).size() == 1);
}

TEST_CASE("koszul betti tables of the triangle") {
	filtered_graph g = triangle_graph();
	grade_grid grid = grade_grid::from_graph(g);
	koszul_report rep = koszul_all(g, grid, 2);
	CHECK(table_multiset(g.ps, rep.beta[0]) == std::multiset<std::string>{"0 0", "0 0", "0 0"});
	CHECK(table_multiset(g.ps, rep.beta[1]) == std::multiset<std::string>{"0 1", "1 0"});
	CHECK(rep.beta[2].empty());
	CHECK(table_multiset(g.ps, rep.beta0_h1) == std::multiset<std::string>{"1 1"});
}

TEST_CASE("koszul oracle over three parameters") {
	filtered_graph g;
	g.ps = poset::rn(3);
	g.add_vertex("u", gr(0, 0, 0));
	g.add_vertex("v", gr(0, 0, 0));
	g.add_edge("a", 0, 1, gr(1, 0, 0));
	g.add_edge("b", 0, 1, gr(0, 1, 0));
	g.add_edge("c", 0, 1, gr(0, 0, 1));
	grade_grid grid = grade_grid::from_graph(g);
	koszul_report rep = koszul_all(g, grid, 2);
	REQUIRE(rep.beta.size() == 4);
	CHECK(table_multiset(g.ps, rep.beta[0]) == std::multiset<std::string>{"0 0 0", "0 0 0"});
	CHECK(table_multiset(g.ps, rep.beta[1]) ==
	      std::multiset<std::string>{"0 0 1", "0 1 0", "1 0 0"});
	CHECK(table_multiset(g.ps, rep.beta[2]) ==
	      std::multiset<std::string>{"0 1 1", "1 0 1", "1 1 0"});
	CHECK(table_multiset(g.ps, rep.beta[3]) == std::multiset<std::string>{"1 1 1"});
}

TEST_CASE("koszul oracle input limits") {
	finite_poset fp(2, {1, 1, 0, 1});
	filtered_graph g;
	g.ps = poset::finite(fp);
	g.add_vertex("a", grade(0));
	grade_grid grid = grade_grid::from_graph(g);
	CHECK_THROWS_AS(koszul_all(g, grid, 2), poset_error);

	filtered_graph h;
	h.ps = poset::rn(4);
	grade g4;
	g4.coords = {scalar(0), scalar(0), scalar(0), scalar(0)};
	h.add_vertex("a", g4);
	grade_grid hgrid = grade_grid::from_graph(h);
	CHECK_THROWS_AS(koszul_all(h, hgrid, 2), resource_error);
}

TEST_CASE("verification accepts the minimal presentation") {
	filtered_graph g = two_generator_square();
	minpres_result mp = minimal_presentation(g);
	grade_grid grid = grade_grid::from_graph(g);
	verify_report rep = verify_presentation(g, mp.pres, grid);
	CHECK(rep.ok);
	CHECK(rep.reason.empty());
}

TEST_CASE("verification reports dimension mismatches") {
	filtered_graph g = two_generator_square();
	minpres_result mp = minimal_presentation(g);
	grade_grid grid = grade_grid::from_graph(g);

	sparse_presentation broken = mp.pres;
	broken.rows.pop_back();
	verify_report rep = verify_presentation(g, broken, grid);
	CHECK_FALSE(rep.ok);
	CHECK(rep.reason.find("dimension mismatch at grade") == 0);
}

TEST_CASE("verification reports non-minimal generators") {
	filtered_graph g;
	g.ps = poset::rn(2);
	g.add_vertex("u", gr(0, 0));
	grade_grid grid = grade_grid::from_graph(g);

	// two generators cancelled down to the right dimension by one relation
	sparse_presentation pres;
	pres.rows = {gr(0, 0), gr(0, 0)};
	pres.cols = {gr(0, 0)};
	pres.entries = {{1, 1, -1}, {2, 1, 1}};
	verify_report rep = verify_presentation(g, pres, grid);
	CHECK_FALSE(rep.ok);
	CHECK(rep.reason == "presentation is not minimal: generator grades differ from beta0");
}

TEST_CASE("verification reports non-minimal relations") {
	filtered_graph g;
	g.ps = poset::rn(2);
	g.add_vertex("u", gr(0, 0));
	g.add_vertex("v", gr(0, 0));
	g.add_edge("a", 0, 1, gr(0, 1));
	g.add_edge("b", 0, 1, gr(0, 1));
	grade_grid grid = grade_grid::from_graph(g);

	sparse_presentation pres;
	pres.rows = {gr(0, 0), gr(0, 0)};
	pres.cols = {gr(0, 1), gr(0, 1)};
	pres.entries = {{1, 1, -1}, {2, 1, 1}, {1, 2, -1}, {2, 2, 1}};
	verify_report rep = verify_presentation(g, pres, grid);
	CHECK_FALSE(rep.ok);
	CHECK(rep.reason == "presentation is not minimal: relation grades differ from beta1");
}

TEST_CASE("verification over a finite poset checks dimensions only") {
	filtered_graph g = random_finite_lattice_graph(5, 12, 10, 18);
	minpres_result mp = minimal_presentation(g);
	grade_grid grid = grade_grid::from_graph(g);
	CHECK(verify_presentation(g, mp.pres, grid).ok);

	sparse_presentation broken = mp.pres;
	REQUIRE(!broken.rows.empty());
	broken.rows.push_back(broken.rows.front());
	CHECK_FALSE(verify_presentation(g, broken, grid).ok);
}

TEST_CASE("field independence of the oracle on a random sample") {
	for (uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
		bench_config cfg;
		cfg.seed = seed;
		cfg.vertices = 12;
		cfg.edges = 22;
		cfg.grid = 6;
		filtered_graph g = random_graph(cfg);
		grade_grid grid = grade_grid::from_graph(g);
		koszul_report r2 = koszul_all(g, grid, 2);
		koszul_report r5 = koszul_all(g, grid, 5);
		for (int i = 0; i <= 2; ++i)
			CHECK(table_multiset(g.ps, r2.beta[i]) == table_multiset(g.ps, r5.beta[i]));
		CHECK(table_multiset(g.ps, r2.beta0_h1) == table_multiset(g.ps, r5.beta0_h1));
	}
}
