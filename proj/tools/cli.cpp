#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idem/graph.hpp"
#include "idem/laws.hpp"
#include "idem/solvers.hpp"
#include "idem/text_io.hpp"

namespace idem::cli {

namespace {

using nlohmann::json;

/// A usage problem detected after CLI11 parsing succeeded.
class UsageError : public Error {
 public:
  using Error::Error;
};

json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json json_element(const Semiring& s, const Element& e) {
  if (s.is_interval()) return json::array({json_number(e.lo), json_number(e.hi)});
  return json_number(e.value());
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return read_all(file);
}

// A matrix file starts with `rows cols semiring`; a graph TSV never has that shape.
bool looks_like_matrix(std::string_view text) {
  std::istringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line.front() == '#' || line == "\r") continue;
    if (line.find('\t') != std::string::npos) return false;
    std::istringstream head(line);
    std::size_t rows = 0, cols = 0;
    std::string name, extra;
    return static_cast<bool>(head >> rows >> cols >> name) && !(head >> extra);
  }
  return false;
}

struct Common {
  std::string semiring;
  std::string input;
  std::string output;
  std::string format = "tsv";
};

Format parse_format(const std::string& f) { return f == "json" ? Format::Json : Format::Tsv; }

std::optional<Semiring> requested(const Common& c) {
  if (c.semiring.empty()) return std::nullopt;
  try {
    return Semiring::parse(c.semiring);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void reject_deformed(const Semiring& s, const std::string& cmd) {
  if (s.kind() == Kind::Deformed) {
    throw UsageError(s.name() + " is not idempotent; '" + cmd +
                     "' accepts it only for axioms and integrate");
  }
}

NodeValues reachability(const NodeValues& values, const Semiring& s) {
  NodeValues out;
  for (const auto& [node, v] : values) {
    out.emplace_back(node, Element(v == s.zero() ? 0.0 : 1.0));
  }
  return out;
}

}  // namespace

std::string format_output(const NodeValues& values, const Semiring& s, Format fmt) {
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& [node, v] : values) arr.push_back({{"node", node}, {"value", json_element(s, v)}});
    return dump(arr);
  }
  std::string out;
  for (const auto& [node, v] : values) out += node + "\t" + format_element(s, v) + "\n";
  return out;
}

std::string format_output(const Matrix& m, Format fmt) {
  if (fmt == Format::Tsv) return write_matrix(m);
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& e : m.row(i)) row.push_back(json_element(m.semiring(), e));
    rows.push_back(std::move(row));
  }
  return dump(rows);
}

std::string format_output(const SampledFunction& f, Format fmt) {
  if (fmt == Format::Tsv) return write_function_csv(f);
  json arr = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    arr.push_back({{"x", json_number(f.xs()[i])}, {"value", json_element(f.semiring(), f.values()[i])}});
  }
  return dump(arr);
}

std::string format_output(const Element& value, const Semiring& s, Format fmt) {
  if (fmt == Format::Json) return dump(json{{"value", json_element(s, value)}});
  return format_element(s, value) + "\n";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Semiring-generic closure, Bellman, integration and Legendre tools", "idem"};
  app.fallthrough();
  app.require_subcommand(1);

  Common common;
  app.add_option("--semiring", common.semiring,
                 "max-plus, min-plus, max-min, field, deformed:h=<float>, interval-max-plus, "
                 "interval-min-plus");
  app.add_option("--input", common.input, "input file (default: stdin)");
  app.add_option("--output", common.output, "output file (default: stdout)");
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* closure = app.add_subcommand("closure", "A* of a graph or matrix");

  std::optional<std::string> source;
  std::optional<std::string> target;
  auto* shortest = app.add_subcommand("shortest-path", "min-plus path lengths");
  auto* widest = app.add_subcommand("widest-path", "max-min bottleneck capacities");
  auto* reach = app.add_subcommand("transitive-closure", "reachability");
  for (auto* sub : {shortest, widest, reach}) {
    sub->add_option("--source", source, "source node");
    sub->add_option("--target", target, "target node (needs --source)");
  }

  std::string rhs_path;
  std::string method = "jacobi";
  std::size_t max_iterations = 0;
  double tolerance = 1e-10;
  auto* bellman = app.add_subcommand("bellman", "solve X = AX (+) B");
  bellman->add_option("--rhs", rhs_path, "file holding B (default: second matrix of --input)");
  bellman->add_option("--method", method)->check(CLI::IsMember({"jacobi", "gauss-seidel"}));
  bellman->add_option("--max-iterations", max_iterations, "0 picks the default cap");
  bellman->add_option("--tolerance", tolerance, "residual tolerance for non-idempotent semirings");

  double xi_min = -1.0;
  double xi_max = 1.0;
  double xi_step = 0.1;
  auto* legendre = app.add_subcommand("legendre", "sup_x (xi x + f(x)) of a max-plus function");
  legendre->add_option("--xi-min", xi_min);
  legendre->add_option("--xi-max", xi_max);
  legendre->add_option("--xi-step", xi_step)->check(CLI::PositiveNumber);

  std::string rule = "rectangle";
  auto* integrate = app.add_subcommand("integrate", "rectangle rule, idempotent sup, or field trapezoid");
  integrate->add_option("--rule", rule)->check(CLI::IsMember({"rectangle", "sup", "trapezoid"}));

  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  auto* axioms = app.add_subcommand("axioms", "check the semiring laws on random samples");
  axioms->add_option("--samples", samples)->check(CLI::PositiveNumber);
  axioms->add_option("--seed", seed);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("idem");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Format fmt = parse_format(common.format);
  std::ostringstream result;
  int status = 0;

  try {
    const auto chosen = requested(common);
    const std::string text = axioms->parsed() ? std::string{} : read_input(common.input, in);

    if (closure->parsed()) {
      if (looks_like_matrix(text)) {
        const Matrix a = parse_matrix(text);
        if (chosen && !(*chosen == a.semiring())) {
          throw UsageError("--semiring " + chosen->name() + " conflicts with the matrix's " +
                           a.semiring().name());
        }
        reject_deformed(a.semiring(), "closure");
        result << format_output(closure_gauss_jordan(a), fmt);
      } else {
        const Semiring s = chosen.value_or(Semiring::min_plus());
        reject_deformed(s, "closure");
        const Graph g = parse_graph(text);
        try {
          result << format_output(closure_gauss_jordan(lower_graph(g, s)), fmt);
        } catch (const NonStabilizing& e) {
          const std::string node = g.nodes().at(e.index().value_or(0));
          throw NonStabilizing("closure does not stabilize at node '" + node + "' (" + s.name() +
                                   " pivot star undefined)",
                               e.index(), node);
        }
      }
    } else if (shortest->parsed() || widest->parsed() || reach->parsed()) {
      const PathProblem problem = shortest->parsed()  ? PathProblem::ShortestPath
                                  : widest->parsed() ? PathProblem::WidestPath
                                                     : PathProblem::TransitiveClosure;
      const Semiring s = semiring_for(problem);
      if (chosen && !(*chosen == s)) {
        throw UsageError("this problem is solved over " + s.name() + ", not " + chosen->name());
      }
      if (target && !source) throw UsageError("--target needs --source");
      const Graph g = parse_graph(text);
      const PathResult r = solve_path_problem(g, problem, source, target);
      if (r.closure) {
        result << format_output(*r.closure, fmt);
      } else if (problem == PathProblem::TransitiveClosure) {
        result << format_output(reachability(r.values, s), Semiring::field(), fmt);
      } else {
        result << format_output(r.values, s, fmt);
      }
    } else if (bellman->parsed()) {
      std::vector<Matrix> ms = parse_matrices(text);
      if (!rhs_path.empty()) {
        std::ifstream rhs_file(rhs_path, std::ios::binary);
        if (!rhs_file) throw UsageError("cannot open '" + rhs_path + "'");
        ms.push_back(parse_matrix(read_all(rhs_file)));
      }
      if (ms.size() != 2) {
        throw UsageError("bellman needs exactly two matrices A and B, got " +
                         std::to_string(ms.size()));
      }
      reject_deformed(ms[0].semiring(), "bellman");
      SolverOptions opts;
      opts.tolerance = tolerance;
      opts.max_iterations = max_iterations;
      const BellmanSolution sol = method == "jacobi" ? solve_bellman_jacobi(ms[0], ms[1], opts)
                                                     : solve_bellman_gauss_seidel(ms[0], ms[1], opts);
      if (fmt == Format::Json) {
        json j = json::parse(format_output(sol.x, fmt));
        result << dump(json{{"x", j}, {"iterations", sol.iterations}, {"stabilized", sol.stabilized}});
      } else {
        result << format_output(sol.x, fmt) << "# iterations " << sol.iterations << "\n";
      }
    } else if (legendre->parsed()) {
      if (chosen && chosen->kind() != Kind::MaxPlus) {
        throw UsageError("legendre works over max-plus, not " + chosen->name());
      }
      if (xi_max < xi_min) throw UsageError("--xi-max must not be below --xi-min");
      const SampledFunction f = parse_function_csv(text, Semiring::max_plus());
      std::vector<double> xis;
      const auto count = static_cast<std::size_t>(std::floor((xi_max - xi_min) / xi_step + 1e-9)) + 1;
      for (std::size_t k = 0; k < count; ++k) xis.push_back(xi_min + static_cast<double>(k) * xi_step);
      result << format_output(legendre_transform(f, xis), fmt);
    } else if (integrate->parsed()) {
      const Semiring s = chosen.value_or(Semiring::field());
      const SampledFunction f = parse_function_csv(text, s);
      const Element v = rule == "sup"         ? idempotent_integral(f)
                        : rule == "trapezoid" ? trapezoid(f)
                                              : riemann_universal(f);
      result << format_output(v, s, fmt);
    } else if (axioms->parsed()) {
      if (!chosen) throw UsageError("axioms needs --semiring");
      for (const auto& law : check_laws(*chosen, samples, seed)) {
        result << law.law << "\t";
        if (!law.checked) {
          result << "skipped\n";
        } else if (law.ok()) {
          result << "ok\n";
        } else {
          result << "FAILED " << law.failures << " of " << samples << " (e.g. "
                 << law.counterexample << ")\n";
          status = 3;
        }
      }
    }
  } catch (const NonStabilizing& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const StarUndefined& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (common.output.empty() || common.output == "-") {
    out << result.str();
  } else {
    std::ofstream file(common.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << common.output << "'\n";
      return 2;
    }
    file << result.str();
  }
  return status;
}

}  // namespace idem::cli
