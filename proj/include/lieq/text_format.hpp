#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieq/algebra.hpp"

namespace lieq {

struct ParsedAlgebra {
    LieAlgebra algebra;
    /// Non-fatal findings, e.g. a failed Jacobi check.
    std::vector<std::string> warnings;
};

/// Parses the algebra definition format:
///
///     algebra <name>
///     generators: <g1> ... <gn>
///     bracket <ga> <gb> = <scalar>*<gc> + <scalar>*<gd> ...
///
/// `#` starts a comment. Unlisted pairs are zero. Throws ParseError naming
/// `source`, the line and the offending token.
ParsedAlgebra parse_algebra(std::string_view text, const std::string& source = "<input>");

/// Reads and parses a file; I/O failures are reported as ParseError too.
ParsedAlgebra load_algebra_file(const std::string& path);

/// Canonical definition text. Parsing it back gives an equal algebra.
std::string emit_algebra(const LieAlgebra& algebra);

/// "bracket T1 J3 = -i*T2" right-hand side for one coefficient vector.
std::string format_combination(const LieAlgebra& algebra, const Vector& v);

/// Square matrix, one row per line, whitespace separated scalar tokens.
Matrix parse_matrix(std::string_view text, const std::string& source = "<input>");
Matrix load_matrix_file(const std::string& path);

} // namespace lieq
