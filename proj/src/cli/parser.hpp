#pragma once

#include <spbw/cli.hpp>

namespace spbw::cli
{

// standard_only rejects products that would need rewriting; used for relation
// right-hand sides, which are read before the relations exist.
StdPoly parse_expression(const Algebra &a, std::string_view text, bool standard_only);

} // namespace spbw::cli
