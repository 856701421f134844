#pragma once

#include <stdexcept>
#include <string>

#include "mbd/graph.hpp"

namespace mbd {

// Malformed input; what() carries a byte or line position.
class GraphFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Standard graph6 ASCII encoding. Writing supports any graph within the
// width limit (the long form covers 63..64 vertices); parsing rejects
// graphs wider than the limit.
std::string write_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// One "u v" pair per line, 0-based ids; blank lines are skipped. The
// vertex count is max id + 1 unless a larger n is given.
Graph parse_edge_list(const std::string& text, int n = -1);
std::string write_edge_list(const Graph& g);

}  // namespace mbd
