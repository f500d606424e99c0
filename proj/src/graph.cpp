#include "idem/graph.hpp"

#include <charconv>
#include <cmath>

namespace idem {

std::size_t Graph::add_node(const std::string& name) {
  const auto [it, inserted] = index_.try_emplace(name, nodes_.size());
  if (inserted) nodes_.push_back(name);
  return it->second;
}

void Graph::add_edge(const std::string& from, const std::string& to, double weight) {
  add_node(from);
  add_node(to);
  edges_.push_back({from, to, weight});
}

std::optional<std::size_t> Graph::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw UnknownNode("unknown node '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    for (auto f : fields) {
      if (f.empty()) throw ParseError("empty field", line_no);
    }
    if (fields.size() == 1) {
      g.add_node(std::string(fields[0]));
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError("expected from<TAB>to<TAB>weight, got " + std::to_string(fields.size()) +
                           " fields",
                       line_no);
    }
    const auto w = fields[2];
    double weight = 0.0;
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
    if (ec != std::errc() || ptr != w.data() + w.size() || !std::isfinite(weight)) {
      throw ParseError("invalid weight '" + std::string(w) + "'", line_no);
    }
    g.add_edge(std::string(fields[0]), std::string(fields[1]), weight);
  }
  return g;
}

Matrix lower_graph(const Graph& g, const Semiring& s, bool unit_weights) {
  if (g.size() == 0) throw DimensionMismatch("cannot lower an empty graph");
  Matrix a(s, g.size(), g.size());
  for (const auto& e : g.edges()) {
    const auto i = g.index_of(e.from);
    const auto j = g.index_of(e.to);
    const Element w = unit_weights ? s.one() : s.embed(e.weight);
    a.set(i, j, s.add(a(i, j), w));
  }
  return a;
}

}  // namespace idem
