#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgbetti/bench.hpp"
#include "fgbetti/betti_r2.hpp"
#include "fgbetti/io.hpp"
#include "fgbetti/oracle.hpp"

namespace {

// exit codes: 0 ok, 1 invalid input or unsupported computation, 2 usage,
// 3 verification mismatch, 4 i/o failure
constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_mismatch = 3;
constexpr int exit_io = 4;

fgb::filtered_graph read_graph(const std::string& path) {
	if (path == "-") return fgb::parse_graph(std::cin, ".");
	return fgb::load_graph(path);
}

fgb::multicritical_graph read_multicritical(const std::string& path) {
	if (path == "-") return fgb::parse_multicritical(std::cin, ".");
	return fgb::load_multicritical(path);
}

void write_output(const std::string& path, const std::string& text) {
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out) throw fgb::io_error("cannot open '" + path + "' for writing");
	out << text;
	if (!out.flush()) throw fgb::io_error("write to '" + path + "' failed");
}

int require_valid(const fgb::filtered_graph& g) {
	auto bad = fgb::validate(g);
	for (const std::string& b : bad) std::cerr << "invalid input: " << b << "\n";
	return bad.empty() ? exit_ok : exit_invalid;
}

fgb::dendro_backend backend_from(const std::string& name) {
	return name == "naive" ? fgb::dendro_backend::naive : fgb::dendro_backend::fast;
}

std::string sorted_lines(const fgb::poset& ps, const fgb::betti_table& t) {
	std::vector<std::string> lines;
	lines.reserve(t.size());
	for (const fgb::grade& g : t) lines.push_back(ps.grade_str(g));
	std::sort(lines.begin(), lines.end());
	std::string out;
	for (const std::string& l : lines) {
		out += l;
		out += "\n";
	}
	return out;
}

int run_reduce(const std::string& in, const std::string& out) {
	fgb::filtered_graph g = read_graph(in);
	if (int rc = require_valid(g)) return rc;
	fgb::collapse_result res = fgb::vertex_minimize(g);
	std::string text = fgb::write_graph(res.graph);
	for (const auto& [orig, kept] : res.vertex_map)
		if (orig != kept) text += "# folded " + orig + " " + kept + "\n";
	write_output(out, text);
	return exit_ok;
}

int run_minpres(const std::string& in, const std::string& out) {
	fgb::filtered_graph g = read_graph(in);
	if (int rc = require_valid(g)) return rc;
	fgb::minpres_result res = fgb::minimal_presentation(g);
	write_output(out, fgb::render_presentation(g.ps, res.pres));
	return exit_ok;
}

int run_betti2d(const std::string& in, const std::string& out, const std::string& backend) {
	fgb::filtered_graph g = read_graph(in);
	if (int rc = require_valid(g)) return rc;
	fgb::betti_report rep = fgb::betti_r2(g, backend_from(backend));
	write_output(out, fgb::render_betti_report(g.ps, rep));
	return exit_ok;
}

int run_onecrit(const std::string& in, const std::string& out) {
	fgb::multicritical_graph g = read_multicritical(in);
	auto bad = fgb::validate(g);
	for (const std::string& b : bad) std::cerr << "invalid input: " << b << "\n";
	if (!bad.empty()) return exit_invalid;
	fgb::onecrit_result res = fgb::one_criticalize(g);
	std::string text = fgb::write_graph(res.graph);
	for (const auto& [id, orig] : res.provenance)
		if (id != orig) text += "# from " + id + " " + orig + "\n";
	write_output(out, text);
	return exit_ok;
}

int run_oracle(const std::string& in, const std::string& out, int field, int grid_cap) {
	fgb::filtered_graph g = read_graph(in);
	if (int rc = require_valid(g)) return rc;
	fgb::grade_grid grid = fgb::grade_grid::from_graph(g, grid_cap);
	fgb::koszul_report rep = fgb::koszul_all(g, grid, field);
	write_output(out, fgb::render_oracle_report(g.ps, rep, field));
	return exit_ok;
}

int run_verify(const std::string& in, int field, int grid_cap, const std::string& backend) {
	fgb::filtered_graph g = read_graph(in);
	if (int rc = require_valid(g)) return rc;
	fgb::grade_grid grid = fgb::grade_grid::from_graph(g, grid_cap);

	fgb::minpres_result mp = fgb::minimal_presentation(g);
	fgb::verify_report rep = fgb::verify_presentation(g, mp.pres, grid);
	if (!rep.ok) {
		std::cerr << "verify: minimal presentation: " << rep.reason << "\n";
		return exit_mismatch;
	}
	std::cout << "ok: presentation matches component counts at " << grid.points()
	          << " grid points\n";

	if (g.ps.is_rn() && g.ps.arity() == 2) {
		fgb::betti_report fast = fgb::betti_r2(g, backend_from(backend));
		fgb::koszul_report oracle = fgb::koszul_all(g, grid, field);
		auto check = [&](const char* name, const fgb::betti_table& got,
		                 const fgb::betti_table& want) {
			if (sorted_lines(g.ps, got) == sorted_lines(g.ps, want)) return true;
			std::cerr << "verify: " << name << " differs from the koszul oracle\n";
			return false;
		};
		if (!check("betti0", fast.beta0, oracle.beta[0]) ||
		    !check("betti1", fast.beta1, oracle.beta[1]) ||
		    !check("betti2", fast.beta2, oracle.beta[2]) ||
		    !check("betti0_h1", fast.beta0_h1, oracle.beta0_h1))
			return exit_mismatch;
		std::cout << "ok: betti tables match the koszul oracle over F" << field << "\n";
	}
	return exit_ok;
}

int run_bench(uint64_t seed, int vertices, int edges, int grid, const std::string& op,
              int reps, const std::string& emit) {
	fgb::bench_config cfg;
	cfg.seed = seed;
	cfg.vertices = vertices;
	cfg.edges = edges;
	cfg.grid = grid;
	cfg.arity = 2;
	fgb::filtered_graph g = fgb::random_graph(cfg);
	if (!emit.empty()) write_output(emit, fgb::write_graph(g));

	double best = 0;
	size_t sink = 0;
	for (int r = 0; r < reps; ++r) {
		auto t0 = std::chrono::steady_clock::now();
		if (op == "minpres") {
			fgb::minpres_result res = fgb::minimal_presentation(g);
			sink += res.pres.cols.size();
		} else if (op == "reduce") {
			fgb::collapse_result res = fgb::vertex_minimize(g);
			sink += res.beta0.size();
		} else {
			fgb::betti_report rep = fgb::betti_r2(g);
			sink += rep.beta1.size();
		}
		auto t1 = std::chrono::steady_clock::now();
		double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
		if (r == 0 || ms < best) best = ms;
	}
	std::cout << op << " seed=" << seed << " vertices=" << vertices << " edges=" << edges
	          << " grid=" << grid << " result_size=" << sink / (size_t)reps << " ms=" << best
	          << "\n";
	return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"minimal presentations and betti tables of 0-dimensional persistent homology "
	             "of poset-filtered graphs"};
	app.require_subcommand(1);

	std::string in, out, backend = "fast", op = "betti2d", emit;
	int field = 2, grid_cap = 64, vertices = 1024, edges = 4096, grid = 1024, reps = 1;
	uint64_t seed = 1;

	auto add_io = [&](CLI::App* cmd, bool with_out = true) {
		cmd->add_option("input", in, "input file, or - for standard input")->required();
		if (with_out) cmd->add_option("-o,--output", out, "output file (default standard output)");
	};

	CLI::App* reduce = app.add_subcommand("reduce", "collapse to the vertex-minimal graph");
	add_io(reduce);

	CLI::App* minpres =
	    app.add_subcommand("minpres", "minimal presentation of zeroth persistent homology");
	add_io(minpres);

	CLI::App* betti2d = app.add_subcommand(
	    "betti2d", "betti tables of zeroth homology over R^2 via the dendrogram sweep");
	add_io(betti2d);
	betti2d->add_option("--backend", backend, "dendrogram backend: fast or naive")
	    ->check(CLI::IsMember({"fast", "naive"}));

	CLI::App* onecrit =
	    app.add_subcommand("onecrit", "expand a multi-critical graph to a 1-critical one");
	add_io(onecrit);

	CLI::App* oracle = app.add_subcommand(
	    "oracle", "brute-force betti tables over a prime field on the grade grid");
	add_io(oracle);
	oracle->add_option("--field", field, "prime field characteristic")
	    ->check(CLI::IsMember({2, 3, 5}));
	oracle->add_option("--grid-cap", grid_cap, "largest allowed grid axis");

	CLI::App* verify = app.add_subcommand(
	    "verify", "cross-check the fast algorithms against the brute-force oracles");
	add_io(verify, false);
	verify->add_option("--field", field, "prime field characteristic")
	    ->check(CLI::IsMember({2, 3, 5}));
	verify->add_option("--grid-cap", grid_cap, "largest allowed grid axis");
	verify->add_option("--backend", backend, "dendrogram backend: fast or naive")
	    ->check(CLI::IsMember({"fast", "naive"}));

	CLI::App* bench =
	    app.add_subcommand("bench", "time one operation on a seeded random bifiltered graph");
	bench->add_option("--seed", seed, "generator seed");
	bench->add_option("--vertices", vertices, "vertex count");
	bench->add_option("--edges", edges, "edge count");
	bench->add_option("--grid", grid, "coordinates are drawn from [0, grid)");
	bench->add_option("--op", op, "operation to time")
	    ->check(CLI::IsMember({"betti2d", "minpres", "reduce"}));
	bench->add_option("--reps", reps, "repetitions, best time wins")->check(CLI::PositiveNumber);
	bench->add_option("--emit", emit, "also write the generated graph to this file");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? exit_ok : exit_usage;
	}

	try {
		if (app.got_subcommand(reduce)) return run_reduce(in, out);
		if (app.got_subcommand(minpres)) return run_minpres(in, out);
		if (app.got_subcommand(betti2d)) return run_betti2d(in, out, backend);
		if (app.got_subcommand(onecrit)) return run_onecrit(in, out);
		if (app.got_subcommand(oracle)) return run_oracle(in, out, field, grid_cap);
		if (app.got_subcommand(verify)) return run_verify(in, field, grid_cap, backend);
		if (app.got_subcommand(bench)) return run_bench(seed, vertices, edges, grid, op, reps, emit);
	} catch (const fgb::io_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_io;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_invalid;
	}
	return exit_usage;
}
