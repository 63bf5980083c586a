#pragma once
// Command dispatch for the intcol tool. Kept in a header so tests can drive
// run() with in-memory streams.
//
// Exit codes: 0 success, 1 a valid but negative verdict (reject, not
// colorable, violation, inconclusive), 2 usage or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intcol/coloring.hpp"
#include "intcol/fan.hpp"
#include "intcol/generators.hpp"
#include "intcol/io.hpp"
#include "intcol/outerplanar.hpp"
#include "intcol/solver.hpp"
#include "intcol/subcubic.hpp"

namespace intcol::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string read_input(const std::string& path, Io& io) {
  if (path.empty() || path == "-") return slurp(io.in);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return slurp(f);
}

inline void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline json trace_json(const std::vector<ReductionStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    json j{{"case", to_string(s.kind)}, {"edges_before", s.edges_before}};
    if (s.u) j["u"] = *s.u;
    if (s.v) j["v"] = *s.v;
    if (s.w) j["w"] = *s.w;
    if (s.x) j["x"] = *s.x;
    if (s.y) j["y"] = *s.y;
    out.push_back(std::move(j));
  }
  return out;
}

inline json violation_json(const Violation& v) {
  static const char* kinds[] = {"not-proper", "not-interval", "color-unused", "color-out-of-range"};
  return json{{"verdict", "violation"}, {"kind", kinds[v.index()]}, {"detail", describe(v)}};
}

inline json not_colorable_json(const NotColorable& nc) {
  json cert;
  if (const auto* ex = std::get_if<ExhaustedAllT>(&nc.certificate)) {
    cert = json{{"kind", "exhausted-all-t"}, {"t_min", ex->t_min}, {"t_max", ex->t_max}, {"soundness", ex->soundness}};
  } else if (std::holds_alternative<OddCycle>(nc.certificate)) {
    cert = json{{"kind", "odd-cycle"}, {"soundness", "odd cycles need Delta+1 colors in any proper edge coloring"}};
  } else {
    const auto& pc = std::get<ParityCertificate>(nc.certificate);
    cert = json{{"kind", "parity-obstruction"}, {"branches", pc.branches.size()}};
  }
  return json{{"verdict", "not-colorable"}, {"certificate", std::move(cert)}};
}

inline std::string render(const json& j) { return j.dump() + "\n"; }

struct Options {
  std::string in, out, graph, coloring, trace;
  std::string family, method = "construct", format;
  int n = 0, k = 1, l = 1, m = 1;
  std::uint64_t seed = 0;
  std::optional<int> t;
  std::optional<long long> budget_ms;
};

inline std::optional<std::chrono::milliseconds> budget(const Options& o) {
  if (!o.budget_ms) return std::nullopt;
  return std::chrono::milliseconds(*o.budget_ms);
}

inline int cmd_gen(const Options& o, Io& io) {
  Graph g;
  if (o.family == "cycle") {
    g = gen_cycle(o.n);
  } else if (o.family == "tf") {
    g = gen_triangular_fan(o.n).graph;
  } else if (o.family == "tklm") {
    g = gen_triangle_graph(o.k, o.l, o.m).graph;
  } else {
    g = gen_random_outerplanar_subcubic(o.n, o.seed);
  }
  write_output(o.out, o.format == "dot" ? write_dot(g) : write_edge_list(g), io);
  return 0;
}

inline int cmd_recognize(const Options& o, Io& io) {
  const Graph g = read_edge_list(read_input(o.in, io));
  const Recognition r = recognize_outerplanar_2connected(g);
  if (const auto* rej = std::get_if<Rejection>(&r)) {
    write_output(o.out, render({{"verdict", "reject"}, {"reason", to_string(rej->reason)}, {"detail", rej->detail}}), io);
    return 1;
  }
  const auto& emb = std::get<OuterEmbedding>(r);
  json tris = json::array();
  for (const auto& t : separating_triangles(g, emb)) tris.push_back({t[0], t[1], t[2]});
  write_output(o.out,
               render({{"verdict", "accept"},
                       {"order", outer_cycle(emb)},
                       {"chords", edges_json(internal_edges(g, emb))},
                       {"separating_triangles", std::move(tris)}}),
               io);
  return 0;
}

inline int emit_coloring(const Options& o, const Graph& g, const EdgeColoring& c, Io& io) {
  write_output(o.out, o.format == "dot" ? write_dot(g, &c) : write_coloring_json(c), io);
  return 0;
}

inline int cmd_color(const Options& o, Io& io) {
  const Graph g = read_edge_list(read_input(o.in, io));
  if (o.method == "construct") {
    std::vector<ReductionStep> steps;
    EdgeColoring c;
    try {
      if (g.max_degree() == 3 && g.vertex_count() % 2 == 0) {
        c = color_optimal_subcubic(g).coloring;
      } else {
        c = color_subcubic_le4(g, &steps);
      }
    } catch (const PreconditionError& e) {
      write_output(o.out, render({{"verdict", "reject"}, {"reason", e.what()}}), io);
      return 1;
    }
    if (!o.trace.empty()) {
      std::ofstream f(o.trace);
      if (!f) throw UsageError("cannot write " + o.trace);
      f << render(trace_json(steps));
    }
    return emit_coloring(o, g, c, io);
  }

  if (o.t) {
    SearchOptions opts;
    if (auto b = budget(o)) opts.deadline = Clock::now() + *b;
    const SearchResult r = search_interval_coloring(g, *o.t, opts);
    if (r.status == SearchStatus::kFound) return emit_coloring(o, g, *r.coloring, io);
    const char* verdict = r.status == SearchStatus::kOutOfTime ? "inconclusive" : "not-colorable";
    write_output(o.out, render({{"verdict", verdict}, {"t", *o.t}}), io);
    return 1;
  }
  const ColoringOutcome outcome = width(g, budget(o));
  if (const auto* c = std::get_if<Colored>(&outcome)) return emit_coloring(o, g, c->coloring, io);
  if (const auto* nc = std::get_if<NotColorable>(&outcome)) {
    write_output(o.out, render(not_colorable_json(*nc)), io);
  } else {
    write_output(o.out, render({{"verdict", "inconclusive"}, {"t", std::get<Inconclusive>(outcome).t}}), io);
  }
  return 1;
}

inline int cmd_width(const Options& o, Io& io) {
  const Graph g = read_edge_list(read_input(o.in, io));
  const ColoringOutcome outcome = width(g, budget(o));
  if (const auto* c = std::get_if<Colored>(&outcome)) {
    write_output(o.out, render({{"verdict", "colorable"}, {"w", c->t}, {"coloring", coloring_to_json(c->coloring)}}), io);
    return 0;
  }
  if (const auto* nc = std::get_if<NotColorable>(&outcome)) {
    write_output(o.out, render(not_colorable_json(*nc)), io);
  } else {
    write_output(o.out, render({{"verdict", "inconclusive"}, {"t", std::get<Inconclusive>(outcome).t}}), io);
  }
  return 1;
}

inline int cmd_verify(const Options& o, Io& io) {
  const EdgeColoring c = read_coloring_json(read_input(o.in, io));
  const Graph g = o.graph.empty() ? graph_of_coloring(c) : read_edge_list(read_input(o.graph, io));
  std::optional<Violation> bad;
  try {
    bad = find_violation(g, c);
  } catch (const std::invalid_argument& e) {
    write_output(o.out, render({{"verdict", "violation"}, {"kind", "not-covering"}, {"detail", e.what()}}), io);
    return 1;
  }
  if (bad) {
    write_output(o.out, render(violation_json(*bad)), io);
    return 1;
  }
  write_output(o.out, render({{"verdict", "valid"}, {"t", c.t()}}), io);
  return 0;
}

inline int cmd_fan(const Options& o, Io& io) {
  const Graph g = gen_triangular_fan(o.n).graph;
  return emit_coloring(o, g, color_fan(o.n), io);
}

inline int cmd_demo(const Options& o, Io& io) {
  const AxenovichReport r = axenovich_demo(o.n);
  json tris = json::array();
  for (const auto& t : r.separating_triangles) tris.push_back({t[0], t[1], t[2]});
  const bool ok = r.coloring_valid && static_cast<int>(r.separating_triangles.size()) == r.n - 4;
  json j{{"n", r.n},
         {"max_degree", r.max_degree},
         {"separating_triangle_count", r.separating_triangles.size()},
         {"separating_triangles", std::move(tris)},
         {"coloring_valid", r.coloring_valid},
         {"colors", r.coloring.t()},
         {"coloring", coloring_to_json(r.coloring)},
         {"conclusion", ok ? "TF_" + std::to_string(r.n) + " has " + std::to_string(r.separating_triangles.size()) +
                                 " separating triangles and an interval " + std::to_string(r.coloring.t()) +
                                 "-coloring: separating triangles do not preclude interval colorability"
                           : "check failed"}};
  write_output(o.out, render(j), io);
  return ok ? 0 : 1;
}

inline int cmd_export_dot(const Options& o, Io& io) {
  const Graph g = read_edge_list(read_input(o.in, io));
  if (o.coloring.empty()) {
    write_output(o.out, write_dot(g), io);
  } else {
    const EdgeColoring c = read_coloring_json(read_input(o.coloring, io));
    write_output(o.out, write_dot(g, &c), io);
  }
  return 0;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  Options o;
  CLI::App app{"Interval edge-colorings of outerplanar graphs", "intcol"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input file (default stdin)");
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->add_option("--family", o.family, "Graph family")->required()->check(CLI::IsMember({"cycle", "tf", "tklm", "random"}));
  gen->add_option("--n", o.n, "Order parameter");
  gen->add_option("--k", o.k)->check(CLI::PositiveNumber);
  gen->add_option("--l", o.l)->check(CLI::PositiveNumber);
  gen->add_option("--m", o.m)->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed);
  gen->add_option("--out", o.out, "Output file (default stdout)");
  add_format(gen);

  auto* recognize = app.add_subcommand("recognize", "Recognize a 2-connected outerplanar graph");
  add_io(recognize);

  auto* color = app.add_subcommand("color", "Interval-color a graph");
  add_io(color);
  color->add_option("--method", o.method)->check(CLI::IsMember({"construct", "exact"}));
  color->add_option("--t", o.t, "Exact number of colors (exact method)");
  color->add_option("--budget-ms", o.budget_ms, "Search time budget");
  color->add_option("--trace", o.trace, "Write the reduction trace JSON here (construct method)");
  add_format(color);

  auto* wid = app.add_subcommand("width", "Least t with an interval t-coloring");
  add_io(wid);
  wid->add_option("--budget-ms", o.budget_ms, "Search time budget");

  auto* verify = app.add_subcommand("verify", "Validate a coloring JSON");
  add_io(verify);
  verify->add_option("--graph", o.graph, "Edge list the coloring must cover (default: its own edges)");

  auto* fan = app.add_subcommand("fan", "Interval coloring of the triangular fan TF_n");
  fan->add_option("--n", o.n)->required();
  fan->add_option("--out", o.out, "Output file (default stdout)");
  add_format(fan);

  auto* demo = app.add_subcommand("demo-axenovich", "Separating triangles versus interval colorability on TF_n");
  demo->add_option("--n", o.n)->required();
  demo->add_option("--out", o.out, "Output file (default stdout)");

  auto* dot = app.add_subcommand("export-dot", "Export a graph, optionally colored, as DOT");
  add_io(dot);
  dot->add_option("--coloring", o.coloring, "Coloring JSON file");

  std::vector<std::string> argv_store{"intcol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*gen) return cmd_gen(o, io);
    if (*recognize) return cmd_recognize(o, io);
    if (*color) return cmd_color(o, io);
    if (*wid) return cmd_width(o, io);
    if (*verify) return cmd_verify(o, io);
    if (*fan) return cmd_fan(o, io);
    if (*demo) return cmd_demo(o, io);
    if (*dot) return cmd_export_dot(o, io);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace intcol::cli
