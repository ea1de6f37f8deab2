#pragma once

#include <string>
#include <string_view>

#include "gpcalc/graph_product.hpp"

namespace gpcalc {

/// Parses the line-based `.gp` format:
///
///   # comment
///   vertex a Z
///   vertex x Z/2
///   edge a x
///
/// Throws SyntaxError (with a 1-based line number) for malformed lines,
/// duplicate vertices or edges, loops, unknown vertices and bad group specs.
GraphProduct parse_presentation(std::string_view text);

/// Inverse of parse_presentation: vertices in order, then edges sorted.
std::string format_presentation(GraphProduct const& gp);

GraphProduct load_presentation(std::string const& path);

}  // namespace gpcalc
