#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "idem/calculus.hpp"
#include "idem/matrix.hpp"

namespace idem::cli {

enum class Format { Tsv, Json };

using NodeValues = std::vector<std::pair<std::string, Element>>;

/// `node<TAB>value` lines, or a JSON array of {"node", "value"} objects.
std::string format_output(const NodeValues& values, const Semiring& s, Format fmt);
/// Matrix text format, or nested JSON row arrays.
std::string format_output(const Matrix& m, Format fmt);
std::string format_output(const SampledFunction& f, Format fmt);
std::string format_output(const Element& value, const Semiring& s, Format fmt);

/// Entry point behind the `idem` binary. `args` excludes the program name.
/// Returns 0 on success, 2 on parse/usage errors, 3 on algebraic errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace idem::cli
