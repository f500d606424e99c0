#include "idem/text_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace idem {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits into lines, dropping trailing CR, blank lines and `#` comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const auto end = line.find_first_of(" \t", pos);
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view text, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw ParseError("expected a positive integer, got '" + std::string(text) + "'", line);
  }
  return v;
}

template <class F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line()) throw;
    throw ParseError(e.what(), line);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

std::string format_number(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  if (v == 0.0) return "0";  // folds -0
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

double parse_number(std::string_view text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || std::isnan(v)) {
    throw ParseError("invalid number '" + std::string(text) + "'", 0);
  }
  return v;
}

std::string format_element(const Semiring& s, const Element& e) {
  if (s.is_interval()) return format_number(e.lo) + ":" + format_number(e.hi);
  return format_number(e.value());
}

Element parse_element(const Semiring& s, std::string_view text) {
  Element e;
  const auto colon = text.find(':');
  if (s.is_interval()) {
    if (colon == std::string_view::npos) {
      e = s.embed(parse_number(text));
    } else {
      e = Element(parse_number(text.substr(0, colon)), parse_number(text.substr(colon + 1)));
    }
  } else {
    if (colon != std::string_view::npos) {
      throw ParseError("interval value '" + std::string(text) + "' in " + s.name(), 0);
    }
    e = s.embed(parse_number(text));
  }
  s.require(e);
  return e;
}

std::string write_matrix(const Matrix& m) {
  const auto& s = m.semiring();
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " + s.name() + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_element(s, m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::vector<Matrix> parse_matrices(std::string_view text) {
  const auto lines = content_lines(text);
  std::vector<Matrix> out;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    const auto& header = lines[pos++];
    const auto head = tokens(header.text);
    if (head.size() != 3) {
      throw ParseError("matrix header must be 'rows cols semiring'", header.number);
    }
    const auto rows = parse_count(head[0], header.number);
    const auto cols = parse_count(head[1], header.number);
    const Semiring s = at_line(header.number, [&] { return Semiring::parse(head[2]); });

    std::vector<Element> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (pos >= lines.size()) {
        throw ParseError("matrix ends after " + std::to_string(r) + " of " +
                             std::to_string(rows) + " rows",
                         lines.back().number);
      }
      const auto& line = lines[pos++];
      const auto entries = tokens(line.text);
      if (entries.size() != cols) {
        throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                             std::to_string(entries.size()),
                         line.number);
      }
      for (auto tok : entries) {
        data.push_back(at_line(line.number, [&] { return parse_element(s, tok); }));
      }
    }
    out.emplace_back(s, rows, cols, std::move(data));
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  auto all = parse_matrices(text);
  if (all.size() != 1) {
    throw ParseError("expected exactly one matrix, found " + std::to_string(all.size()), 0);
  }
  return std::move(all.front());
}

SampledFunction parse_function_csv(std::string_view text, const Semiring& s) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header 'x,value'", 0);
  {
    const auto& h = lines.front();
    const auto comma = h.text.find(',');
    if (comma == std::string_view::npos || trim(h.text.substr(0, comma)) != "x" ||
        trim(h.text.substr(comma + 1)) != "value") {
      throw ParseError("expected header 'x,value'", h.number);
    }
  }
  std::vector<double> xs;
  std::vector<Element> values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto comma = line.text.find(',');
    if (comma == std::string_view::npos || line.text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected 'x,value'", line.number);
    }
    at_line(line.number, [&] {
      const double x = parse_number(trim(line.text.substr(0, comma)));
      if (!std::isfinite(x)) throw ParseError("grid point must be finite", 0);
      if (!xs.empty() && !(x > xs.back())) throw ParseError("grid must be strictly increasing", 0);
      xs.push_back(x);
      values.push_back(parse_element(s, trim(line.text.substr(comma + 1))));
      return 0;
    });
  }
  return SampledFunction(s, std::move(xs), std::move(values));
}

std::string write_function_csv(const SampledFunction& f) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += format_number(f.xs()[i]) + "," + format_element(f.semiring(), f.values()[i]) + "\n";
  }
  return out;
}

}  // namespace idem
