#ifndef KEMPE_GRAPH6_HPP
#define KEMPE_GRAPH6_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Decode one graph6 line (optional ">>graph6<<" header tolerated).
/// Throws ParseError naming the byte offset on malformed input.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: shortest size header, column-major
/// upper-triangle bits, zero padding. encode(parse(s)) == s for
/// canonical strings.
std::string encode_graph6(const Graph& g);

/// Decode a whole corpus, one graph per non-empty line. Lines starting
/// with '>' are skipped as comments.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace kempe

#endif
