#include "fgbetti/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fgb {

namespace {

struct line_tokens {
	long line = 0;
	std::vector<std::string> tok;
};

// comment-stripped, tokenized lines; ';' becomes its own token
std::vector<line_tokens> tokenize(std::istream& in) {
	std::vector<line_tokens> out;
	std::string raw;
	long line = 0;
	while (std::getline(in, raw)) {
		++line;
		if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
		for (size_t i = 0; i < raw.size(); ++i)
			if (raw[i] == ';') raw.replace(i, 1, " ; "), i += 2;
		std::istringstream ss(raw);
		line_tokens lt;
		lt.line = line;
		std::string t;
		while (ss >> t) lt.tok.push_back(t);
		if (!lt.tok.empty()) out.push_back(std::move(lt));
	}
	return out;
}

[[noreturn]] void fail(long line, const std::string& msg) {
	throw parse_error("line " + std::to_string(line) + ": " + msg);
}

poset parse_poset_line(const line_tokens& lt, const std::string& base_dir) {
	if (lt.tok[0] != "poset" || lt.tok.size() < 2)
		fail(lt.line, "expected 'poset rn <n>' or 'poset finite <file>'");
	if (lt.tok[1] == "rn") {
		if (lt.tok.size() != 3) fail(lt.line, "expected 'poset rn <n>'");
		long n;
		try {
			n = std::stol(lt.tok[2]);
		} catch (...) {
			fail(lt.line, "bad arity '" + lt.tok[2] + "'");
		}
		if (n < 1 || n > 1024) fail(lt.line, "arity out of range");
		return poset::rn((int)n);
	}
	if (lt.tok[1] == "finite") {
		if (lt.tok.size() != 3) fail(lt.line, "expected 'poset finite <file>'");
		std::filesystem::path p(lt.tok[2]);
		if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
		try {
			return poset::finite(finite_poset::load(p.string()), lt.tok[2]);
		} catch (const io_error&) {
			throw;
		} catch (const std::runtime_error& e) {
			fail(lt.line, e.what());
		}
	}
	fail(lt.line, "unknown poset kind '" + lt.tok[1] + "'");
}

// reads one grade starting at tok[pos]; advances pos
grade parse_grade_at(const poset& ps, const line_tokens& lt, size_t& pos) {
	if (ps.is_rn()) {
		grade g;
		g.coords.reserve(ps.arity());
		for (int i = 0; i < ps.arity(); ++i) {
			if (pos >= lt.tok.size() || lt.tok[pos] == ";")
				fail(lt.line, "grade needs " + std::to_string(ps.arity()) + " coordinates");
			try {
				g.coords.push_back(scalar::parse(lt.tok[pos]));
			} catch (const parse_error& e) {
				fail(lt.line, e.what());
			}
			if (!g.coords.back().is_finite()) fail(lt.line, "grade coordinates must be finite");
			++pos;
		}
		return g;
	}
	if (pos >= lt.tok.size() || lt.tok[pos] == ";") fail(lt.line, "missing poset element");
	long e;
	try {
		e = std::stol(lt.tok[pos]);
	} catch (...) {
		fail(lt.line, "bad poset element '" + lt.tok[pos] + "'");
	}
	grade g((int32_t)e);
	try {
		ps.require(g);
	} catch (const descriptor_error& ex) {
		fail(lt.line, ex.what());
	}
	++pos;
	return g;
}

std::vector<grade> parse_grade_list(const poset& ps, const line_tokens& lt, size_t& pos) {
	std::vector<grade> gs;
	gs.push_back(parse_grade_at(ps, lt, pos));
	while (pos < lt.tok.size() && lt.tok[pos] == ";") {
		++pos;
		gs.push_back(parse_grade_at(ps, lt, pos));
	}
	return gs;
}

template <typename AddV, typename AddE>
poset parse_lines(std::istream& in, const std::string& base_dir, bool multi, AddV&& add_v, AddE&& add_e) {
	auto lines = tokenize(in);
	if (lines.empty()) throw parse_error("empty graph file");
	poset ps = parse_poset_line(lines[0], base_dir);
	for (size_t k = 1; k < lines.size(); ++k) {
		const line_tokens& lt = lines[k];
		const std::string& kind = lt.tok[0];
		size_t pos = 1;
		if (kind == "v") {
			if (lt.tok.size() < 2) fail(lt.line, "vertex line needs an id");
			std::string id = lt.tok[pos++];
			auto gs = parse_grade_list(ps, lt, pos);
			if (pos != lt.tok.size()) fail(lt.line, "trailing tokens after vertex grade");
			if (!multi && gs.size() != 1) fail(lt.line, "1-critical graph cannot carry a grade list");
			add_v(lt.line, std::move(id), std::move(gs));
		} else if (kind == "e") {
			if (lt.tok.size() < 4) fail(lt.line, "edge line needs an id and two endpoints");
			std::string id = lt.tok[pos++];
			std::string u = lt.tok[pos++];
			std::string v = lt.tok[pos++];
			auto gs = parse_grade_list(ps, lt, pos);
			if (pos != lt.tok.size()) fail(lt.line, "trailing tokens after edge grade");
			if (!multi && gs.size() != 1) fail(lt.line, "1-critical graph cannot carry a grade list");
			add_e(lt.line, std::move(id), u, v, std::move(gs));
		} else if (kind == "poset") {
			fail(lt.line, "duplicate poset line");
		} else {
			fail(lt.line, "unknown line kind '" + kind + "'");
		}
	}
	return ps;
}

} // namespace

filtered_graph parse_graph(std::istream& in, const std::string& base_dir) {
	filtered_graph g;
	g.ps = parse_lines(
	    in, base_dir, false,
	    [&](long line, std::string id, std::vector<grade> gs) {
		    if (g.vertex_index(id) >= 0) fail(line, "duplicate vertex id '" + id + "'");
		    g.add_vertex(std::move(id), std::move(gs[0]));
	    },
	    [&](long line, std::string id, const std::string& u, const std::string& v, std::vector<grade> gs) {
		    if (g.edge_index(id) >= 0) fail(line, "duplicate edge id '" + id + "'");
		    try {
			    g.add_edge_by_ids(std::move(id), u, v, std::move(gs[0]));
		    } catch (const parse_error& e) {
			    fail(line, e.what());
		    }
	    });
	return g;
}

filtered_graph load_graph(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw io_error("cannot open graph file '" + path + "'");
	std::string dir = std::filesystem::path(path).parent_path().string();
	return parse_graph(in, dir.empty() ? "." : dir);
}

multicritical_graph parse_multicritical(std::istream& in, const std::string& base_dir) {
	multicritical_graph g;
	g.ps = parse_lines(
	    in, base_dir, true,
	    [&](long line, std::string id, std::vector<grade> gs) {
		    if (g.vertex_index(id) >= 0) fail(line, "duplicate vertex id '" + id + "'");
		    g.add_vertex(std::move(id), std::move(gs));
	    },
	    [&](long line, std::string id, const std::string& u, const std::string& v, std::vector<grade> gs) {
		    int ui = g.vertex_index(u), vi = g.vertex_index(v);
		    if (ui < 0) fail(line, "unknown vertex id '" + u + "'");
		    if (vi < 0) fail(line, "unknown vertex id '" + v + "'");
		    g.add_edge(std::move(id), ui, vi, std::move(gs));
	    });
	return g;
}

multicritical_graph load_multicritical(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw io_error("cannot open graph file '" + path + "'");
	std::string dir = std::filesystem::path(path).parent_path().string();
	return parse_multicritical(in, dir.empty() ? "." : dir);
}

namespace {

std::string poset_header(const poset& ps) {
	if (ps.is_rn()) return "poset rn " + std::to_string(ps.arity()) + "\n";
	if (ps.source_ref().empty())
		throw poset_error("cannot serialize a finite poset graph without a poset file reference");
	return "poset finite " + ps.source_ref() + "\n";
}

void append_grade_list(std::string& out, const poset& ps, const std::vector<grade>& gs) {
	for (size_t i = 0; i < gs.size(); ++i) {
		out += i ? " ; " : " ";
		out += ps.grade_str(gs[i]);
	}
}

} // namespace

std::string write_graph(const filtered_graph& g) {
	std::string out = poset_header(g.ps);
	for (const fg_vertex& v : g.vertices)
		out += "v " + v.id + " " + g.ps.grade_str(v.g) + "\n";
	for (const fg_edge& e : g.edges)
		out += "e " + e.id + " " + g.vertices[e.u].id + " " + g.vertices[e.v].id + " " + g.ps.grade_str(e.g) + "\n";
	return out;
}

std::string write_multicritical(const multicritical_graph& g) {
	std::string out = poset_header(g.ps);
	for (const mc_vertex& v : g.vertices) {
		out += "v " + v.id;
		append_grade_list(out, g.ps, v.grades);
		out += "\n";
	}
	for (const mc_edge& e : g.edges) {
		out += "e " + e.id + " " + g.vertices[e.u].id + " " + g.vertices[e.v].id;
		append_grade_list(out, g.ps, e.grades);
		out += "\n";
	}
	return out;
}

namespace {

void append_table(std::string& out, const poset& ps, const std::string& name, const betti_table& t) {
	out += name;
	out += "\n";
	for (const grade& g : t) {
		out += ps.grade_str(g);
		out += "\n";
	}
}

void append_matrix(std::string& out, const std::vector<matrix_entry>& entries) {
	out += "matrix\n";
	for (const matrix_entry& e : entries)
		out += std::to_string(e.row) + " " + std::to_string(e.col) + " " + std::to_string(e.coeff) + "\n";
}

} // namespace

std::string render_presentation(const poset& ps, const sparse_presentation& p) {
	std::string out;
	append_table(out, ps, "betti0", p.rows);
	append_table(out, ps, "betti1", p.cols);
	append_matrix(out, p.entries);
	return out;
}

std::string render_betti_report(const poset& ps, const betti_report& r) {
	std::string out;
	append_table(out, ps, "betti0", r.beta0);
	append_table(out, ps, "betti1", r.beta1);
	append_table(out, ps, "betti2", r.beta2);
	append_table(out, ps, "betti0_h1", r.beta0_h1);
	append_matrix(out, r.entries);
	return out;
}

std::string render_oracle_report(const poset& ps, const koszul_report& r, int field) {
	std::string out = "field " + std::to_string(field) + "\n";
	append_table(out, ps, "betti0", r.beta.size() > 0 ? r.beta[0] : betti_table{});
	append_table(out, ps, "betti1", r.beta.size() > 1 ? r.beta[1] : betti_table{});
	append_table(out, ps, "betti2", r.beta.size() > 2 ? r.beta[2] : betti_table{});
	append_table(out, ps, "betti0_h1", r.beta0_h1);
	append_matrix(out, {});
	return out;
}

} // namespace fgb
