#pragma once

#include <iosfwd>

#include "betti_r2.hpp"
#include "multicritical.hpp"
#include "oracle.hpp"

namespace fgb {

// graph text format. lines, '#' starting a comment anywhere:
//   poset rn <n>          or   poset finite <file>
//   v <id> <grade>
//   e <id> <u-id> <v-id> <grade>
// a grade is n decimal coordinates (rn) or one element index (finite).
// multi-critical files carry ';'-separated lists of grades instead.
// finite poset files are resolved relative to base_dir.
filtered_graph parse_graph(std::istream& in, const std::string& base_dir = ".");
filtered_graph load_graph(const std::string& path);
std::string write_graph(const filtered_graph& g);

multicritical_graph parse_multicritical(std::istream& in, const std::string& base_dir = ".");
multicritical_graph load_multicritical(const std::string& path);
std::string write_multicritical(const multicritical_graph& g);

// presentation output: sections betti0 and betti1 with one grade per line,
// then matrix with one "<row> <col> <coeff>" line per entry, 1-based
std::string render_presentation(const poset& ps, const sparse_presentation& p);

// same sections plus betti2 and betti0_h1 between betti1 and matrix
std::string render_betti_report(const poset& ps, const betti_report& r);

// betti2d sections prefixed with "field <p>"; the matrix section is empty
// because the koszul oracle computes dimensions, not a presentation
std::string render_oracle_report(const poset& ps, const koszul_report& r, int field);

} // namespace fgb
