#pragma once

#include <stdexcept>
#include <string>

namespace fgb {

// malformed input text (graph files, poset files, scalar tokens)
struct parse_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// a grade does not match the poset descriptor it is used with
struct descriptor_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// poset law violations and missing joins
struct poset_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// request exceeds a documented resource cap (oracle grid size, arity)
struct resource_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// cannot open, read or write a file
struct io_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

} // namespace fgb
