#pragma once

// Text front-end: expression parsing, algebra files and command dispatch.

#include <spbw/algebra.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spbw::cli
{

// Grammar:
//   expr   := ["+" | "-"] term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := atom ["^" ["-"] integer]
//   atom   := integer | name | "(" expr ")"
// Products keep their written order and are normalized in the algebra, so
// "y*x" and "x*y" differ whenever the generators do not commute. Division and
// negative powers are accepted only for invertible coefficients (nonzero
// scalars, monomials in Laurent variables).
StdPoly parse_poly(const Algebra &a, std::string_view text);

// A nonzero element of the base field.
Scalar parse_scalar(const Algebra &a, std::string_view text);

std::string render_canonical(const Algebra &a, const StdPoly &f);

// Reads a JSON algebra description and validates it.
Algebra load_algebra(const std::filesystem::path &path);
Algebra load_algebra_text(std::string_view json_text, const std::string &origin = "<memory>");

// "kind:g1,g2,..." (precedence most significant first) or just "kind".
MonomialOrder parse_order(const Algebra &a, std::string_view text);

// Exit codes: 0 property holds, 1 property fails, 2 inconclusive, 3 input error.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace spbw::cli
