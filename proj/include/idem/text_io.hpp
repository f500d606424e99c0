#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idem/calculus.hpp"
#include "idem/matrix.hpp"

namespace idem {

/// Shortest round-trip decimal; infinities spelled `inf` / `-inf`.
std::string format_number(double v);
/// Accepts what format_number writes. Throws ParseError (line 0) otherwise.
double parse_number(std::string_view text);

/// Scalar carriers print one number, interval carriers `lo:hi`.
std::string format_element(const Semiring& s, const Element& e);
Element parse_element(const Semiring& s, std::string_view text);

/// Matrix text format: a `rows cols semiring-name` header line followed by
/// `rows` lines of whitespace-separated entries.
std::string write_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);
/// Several matrices back to back (blank and `#` lines between them ignored).
std::vector<Matrix> parse_matrices(std::string_view text);

/// CSV with header `x,value`; values may be `inf`, `-inf` or `lo:hi`.
SampledFunction parse_function_csv(std::string_view text, const Semiring& s);
std::string write_function_csv(const SampledFunction& f);

}  // namespace idem
