#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "totirr/totirr.hpp"

namespace totirr::cli {

enum ExitCode : int { ok = 0, input_error = 1, internal_error = 2 };

namespace detail {

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_source(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_all(stdin_stream);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_all(f);
}

/// Non-empty lines with trailing CR stripped, paired with 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> lines_of(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream ss(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(ss, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

/// A graph argument: a graph6 string, or `file:<path>` naming a file whose
/// first non-empty line is graph6.
inline Graph graph_argument(const std::string& arg) {
  if (arg.rfind("file:", 0) == 0) {
    std::ifstream f(arg.substr(5), std::ios::binary);
    if (!f) throw InputError("cannot open '" + arg.substr(5) + "'");
    const auto lines = lines_of(read_all(f));
    if (lines.empty()) throw InputError("'" + arg.substr(5) + "' contains no graph");
    return parse_graph6(lines.front().second);
  }
  try {
    return parse_graph6(arg);
  } catch (const ParseError& e) {
    throw InputError("argument '" + arg + "': " + e.what());
  }
}

inline ProductKind kind_argument(const std::string& s) {
  if (auto k = parse_product_kind(s)) return *k;
  throw InputError("unknown operation '" + s +
                   "' (expected join, lexicographic, cartesian, strong, direct, corona, disjunction, symdiff)");
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline int int_param(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

inline Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  auto one = [&](const char* what) {
    if (params.size() != 1) throw InputError("'gen " + family + "' takes exactly one size parameter");
    return int_param(params[0], what);
  };
  if (family == "path") return gen_path(one("path length"));
  if (family == "cycle") return gen_cycle(one("cycle length"));
  if (family == "complete") return gen_complete(one("order"));
  if (family == "star") return gen_star(one("order"));
  if (family == "empty") return gen_empty(one("order"));
  if (family == "extremal") return gen_extremal_total_irr(one("order"));
  if (family == "tree") return gen_random_tree(one("order"), seed);
  if (family == "multipartite") {
    std::vector<int> parts;
    for (const auto& p : params)
      for (const auto& tok : split_csv(p)) parts.push_back(int_param(tok, "part size"));
    return gen_complete_multipartite(parts);
  }
  throw InputError("unknown family '" + family +
                   "' (expected path, cycle, complete, star, empty, multipartite, extremal, tree)");
}

}  // namespace detail

/// Runs the command line. Records go to `out`, diagnostics to `err`.
inline int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total irregularity of graphs and graph operations"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Evaluate indices of each input graph");
  std::string input = "-";
  std::string format = "g6";
  std::string indices = "irr_t";
  double cs_tol = 1e-10;
  compute->add_option("--input", input, "Input file, '-' for standard input")->capture_default_str();
  compute->add_option("--format", format, "g6 (one graph per line) or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}))
      ->capture_default_str();
  compute->add_option("--indices", indices, "Comma-separated: irr_t, irr (m3), m1, m2, var, cs")->capture_default_str();
  compute->add_option("--cs-tol", cs_tol, "Power-iteration tolerance for cs")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph, printed as graph6");
  std::string family;
  std::vector<std::string> params;
  std::uint64_t gen_seed = 0;
  gen->add_option("family", family, "path|cycle|complete|star|empty|multipartite|extremal|tree")->required();
  gen->add_option("params", params, "Size parameter(s)");
  gen->add_option("--seed", gen_seed, "Seed for 'tree'")->capture_default_str();

  // op
  auto* op = app.add_subcommand("op", "Apply a binary graph operation");
  std::string op_kind, op_a, op_b, op_out;
  op->add_option("kind", op_kind)->required();
  op->add_option("a", op_a, "graph6 string or file:<path>")->required();
  op->add_option("b", op_b, "graph6 string or file:<path>")->required();
  op->add_option("-o,--output", op_out, "Write the composite here instead of standard output");

  // bound
  auto* bound = app.add_subcommand("bound", "Compare an upper bound with the actual total irregularity");
  std::string bound_kind, bound_a, bound_b;
  int bound_n = 0;
  bound->add_option("kind", bound_kind, "theorem1 or an operation name")->required();
  bound->add_option("a", bound_a);
  bound->add_option("b", bound_b);
  auto* bound_n_opt = bound->add_option("--n", bound_n, "Order for 'bound theorem1'");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive and randomized verification");
  search->require_subcommand(1);
  int workers = 1;
  auto* s_t1 = search->add_subcommand("theorem1", "Maximum irr_t over all labelled graphs on n vertices");
  int t1_n = 0;
  bool allow_n8 = false;
  s_t1->add_option("--n", t1_n)->required();
  s_t1->add_option("--workers", workers)->capture_default_str()->check(CLI::PositiveNumber);
  s_t1->add_flag("--allow-n8", allow_n8, "Permit n = 8 (2^28 graphs)");

  auto* s_sweep = search->add_subcommand("sweep", "Check a bound on every labelled operand pair");
  std::string sweep_op;
  int sw_n1 = 0, sw_n2 = 0;
  s_sweep->add_option("--op", sweep_op)->required();
  s_sweep->add_option("--n1", sw_n1)->required();
  s_sweep->add_option("--n2", sw_n2)->required();
  s_sweep->add_option("--workers", workers)->capture_default_str()->check(CLI::PositiveNumber);

  auto* s_probe = search->add_subcommand("probe", "Randomized slack statistics for disjunction/symdiff");
  std::string probe_op;
  int pr_n1 = 0, pr_n2 = 0;
  std::uint64_t samples = 0, seed = 0;
  s_probe->add_option("--op", probe_op)->required();
  s_probe->add_option("--n1", pr_n1)->required();
  s_probe->add_option("--n2", pr_n2)->required();
  s_probe->add_option("--samples", samples)->required();
  s_probe->add_option("--seed", seed)->required();
  s_probe->add_option("--workers", workers)->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return input_error;
  }

  try {
    if (*compute) {
      const auto names = detail::split_csv(indices);
      if (names.empty()) throw InputError("--indices is empty");
      for (const auto& name : names)
        if (name != "irr_t" && name != "irr" && name != "m3" && name != "m1" && name != "m2" && name != "var" &&
            name != "cs")
          throw InputError("unknown index '" + name + "'");

      const std::string text = detail::read_source(input, in);
      std::vector<Graph> graphs;
      if (format == "edgelist") {
        graphs.push_back(parse_edge_list(text));
      } else {
        for (const auto& [no, line] : detail::lines_of(text)) {
          try {
            graphs.push_back(parse_graph6(line));
          } catch (const ParseError& e) {
            throw InputError(input + ":" + std::to_string(no) + ": " + e.what());
          }
        }
      }
      for (const auto& g : graphs) {
        const std::string g6 = emit_graph6(g);
        for (const auto& name : names) {
          Record rec;
          rec.field("task", "compute").field("input", g6);
          if (name == "irr_t")
            rec.field("index", "irr_t").field("value", total_irregularity(g));
          else if (name == "irr" || name == "m3")
            rec.field("index", "irr").field("alias", "m3").field("value", irregularity(g));
          else if (name == "m1")
            rec.field("index", "m1").field("value", zagreb_m1(g));
          else if (name == "m2")
            rec.field("index", "m2").field("value", zagreb_m2(g));
          else if (name == "var")
            rec.field("index", "var").field("value", degree_variance(g));
          else
            rec.field("index", "cs").field("value", collatz_sinogowitz(g, {.tolerance = cs_tol}));
          out << rec.line() << "\n";
        }
      }
      return ok;
    }

    if (*gen) {
      out << emit_graph6(detail::generate(family, params, gen_seed)) << "\n";
      return ok;
    }

    if (*op) {
      const Graph result = apply(detail::kind_argument(op_kind), detail::graph_argument(op_a), detail::graph_argument(op_b));
      const std::string g6 = emit_graph6(result);
      if (op_out.empty()) {
        out << g6 << "\n";
      } else {
        std::ofstream f(op_out, std::ios::binary);
        if (!f) throw InputError("cannot write '" + op_out + "'");
        f << g6 << "\n";
      }
      return ok;
    }

    if (*bound) {
      if (bound_kind == "theorem1") {
        if (bound_n_opt->count() == 0) throw InputError("'bound theorem1' requires --n");
        if (!bound_a.empty()) throw InputError("'bound theorem1' takes no graph arguments");
        out << theorem1_bound_record(bound_n).line() << "\n";
        return ok;
      }
      if (bound_a.empty() || bound_b.empty()) throw InputError("'bound " + bound_kind + "' needs two graph arguments");
      const auto kind = detail::kind_argument(bound_kind);
      const Graph g = detail::graph_argument(bound_a), h = detail::graph_argument(bound_b);
      const auto report = evaluate_bound(kind, g, h);
      out << to_record(report, emit_graph6(g), emit_graph6(h)).line() << "\n";
      if (report.violated()) {
        err << "bound violated: actual " << report.actual << " exceeds bound " << report.bound << "\n";
        return internal_error;
      }
      return ok;
    }

    if (*search) {
      SearchOutcome outcome;
      if (*s_t1)
        outcome = verify_theorem1(t1_n, workers, allow_n8);
      else if (*s_sweep)
        outcome = sweep_operation_bounds(detail::kind_argument(sweep_op), sw_n1, sw_n2, workers);
      else
        outcome = probe_open_problem(detail::kind_argument(probe_op), pr_n1, pr_n2, samples, seed, workers);
      out << to_record(outcome).line() << "\n";
      if (outcome.falsified()) {
        err << "falsification: the search contradicts a claimed bound\n";
        return internal_error;
      }
      return ok;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
  return ok;
}

}  // namespace totirr::cli
