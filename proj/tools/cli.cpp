#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polylab/polylab.hpp"

namespace polylab::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kExhaustedTries: return kExhausted;
    case ErrorCode::kSizeLimit:
    case ErrorCode::kTooLarge: return kSizeCap;
    default: return kValidation;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct GenerateArgs {
  std::string family;
  Vertex n = 0;
  Vertex m = 0;
  Vertex d = 0;
  int girth = 3;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int max_tries = 100;
  bool nonbipartite = false;
  std::string input;
  std::string input2;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  Json meta{{"schema", kSchema}, {"family", a.family}};
  RegularGraph g;
  if (a.family == "petersen") {
    g = petersen();
  } else if (a.family == "icosahedron") {
    g = icosahedron();
  } else if (a.family == "cycle") {
    g = cycle_graph(a.n);
    meta["n"] = a.n;
  } else if (a.family == "complete") {
    g = complete_graph(a.n);
    meta["n"] = a.n;
  } else if (a.family == "torus") {
    g = torus_triangulation(a.m, a.n);
    meta["m"] = a.m;
    meta["n"] = a.n;
  } else if (a.family == "random-regular") {
    if (!a.seed_given) fail(ErrorCode::kInvalidArgument, "random-regular needs --seed");
    RandomRegularOptions o;
    o.n = a.n;
    o.d = a.d;
    o.girth_min = a.girth;
    o.seed = a.seed;
    o.max_tries = a.max_tries;
    o.require_nonbipartite = a.nonbipartite;
    g = random_regular_high_girth(o);
    meta["n"] = a.n;
    meta["d"] = a.d;
    meta["girth_min"] = a.girth;
    meta["seed"] = a.seed;
    meta["max_tries"] = a.max_tries;
  } else if (a.family == "distance-two") {
    if (a.input.empty()) fail(ErrorCode::kInvalidArgument, "distance-two needs --input");
    g = distance_two_graph(incidence_graph(load_edge_list(a.input)));
    meta["input"] = a.input;
  } else if (a.family == "tensor") {
    if (a.input.empty() || a.input2.empty()) fail(ErrorCode::kInvalidArgument, "tensor needs --input and --input2");
    g = tensor_product(load_edge_list(a.input), load_edge_list(a.input2));
    meta["input"] = a.input;
    meta["input2"] = a.input2;
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown family " + a.family);
  }
  meta["vertices"] = g.num_vertices();
  meta["degree"] = g.degree();
  const auto gg = girth(g);
  meta["girth"] = gg ? Json(*gg) : Json(nullptr);
  if (a.out.empty()) {
    write_edge_list(out, g);
    err << meta.dump() << '\n';
  } else {
    save_edge_list(a.out, g);
    meta["output"] = a.out;
    emit(out, meta);
  }
  return kOk;
}

struct PolygraphArgs {
  std::string input;
  std::string s;
  std::string out;
  bool allow_unsafe = false;
};

int cmd_polygraph(const PolygraphArgs& a, std::ostream& out) {
  const RegularGraph base = load_edge_list(a.input);
  const auto s = DistanceMultiset::parse(a.s);
  PolygraphOptions opt;
  opt.allow_unsafe_girth = a.allow_unsafe;
  const Polygraph p = build_polygraph(base, s, opt);
  const auto& g = p.graph();
  Json report = polygraph_sidecar(p, a.input);
  report["vertices"] = g.num_vertices();
  report["edges"] = g.num_edges();
  report["degree"] = g.degree();
  const auto b = common_neighbor_count(g);
  report["measured_b"] = b ? Json(*b) : Json(nullptr);
  report["triangles"] = count_triangles(g);
  report["connected"] = is_connected(g);
  report["bipartite"] = is_bipartite(g);
  if (!a.out.empty()) {
    save_edge_list(a.out + ".edges", g);
    std::ofstream side(a.out + ".json");
    side << polygraph_sidecar(p, a.input).dump(2) << '\n';
    report["files"] = {a.out + ".edges", a.out + ".json"};
  }
  emit(out, report);
  return kOk;
}

struct AnalyzeArgs {
  std::string input;
  bool aux = false;
  bool require_ab = false;
  bool no_spectrum = false;
  bool links = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const RegularGraph g = load_edge_list(a.input);
  Json report{{"schema", kSchema}, {"n", g.num_vertices()}, {"d", g.degree()}, {"edges", g.num_edges()}};
  const auto b = common_neighbor_count(g);
  if (b) {
    report["a"] = g.degree();
    report["b"] = *b;
  } else {
    report["a"] = nullptr;
    report["b"] = nullptr;
    if (a.require_ab) {
      err << "error: graph is not (a,b)-regular\n";
      return kValidation;
    }
  }
  const auto gg = girth(g);
  report["girth"] = gg ? Json(*gg) : Json(nullptr);
  report["connected"] = is_connected(g);
  report["bipartite"] = is_bipartite(g);
  report["triangles"] = count_triangles(g);
  if (!a.no_spectrum) report["spectrum"] = to_json(spectrum(g, {.allow_iterative = true}));
  if (a.links && g.num_vertices() > 0) {
    const auto nb = g.neighbors(0);
    const std::vector<Vertex> vs(nb.begin(), nb.end());
    const SimpleGraph link = induced_subgraph(g, vs);
    Json l{{"vertex", 0}, {"vertices", link.num_vertices()}, {"connected", is_connected(link)}};
    if (link.common_degree()) l["spectrum"] = to_json(spectrum(RegularGraph(link)));
    report["link"] = l;
  }
  if (a.aux) {
    const CliqueComplex2 complex(g);
    Json tpe = Json::object();
    for (const auto& [count, edges] : triangles_per_edge(complex)) tpe[std::to_string(count)] = edges;
    report["triangles_per_edge"] = tpe;
    const auto limits = default_limits();
    report["aux"] = to_json(aux_graph(complex, 4000, limits.aux_dense_edges));
  }
  emit(out, report);
  return kOk;
}

int cmd_link(const std::string& s_text, int d, std::ostream& out) {
  const auto s = DistanceMultiset::parse(s_text);
  Json j = to_json(build_link_via_tree(s, d));
  j["schema"] = kSchema;
  emit(out, j);
  return kOk;
}

int cmd_bounds(const std::vector<std::string>& rest, const std::string& format, double delta, std::ostream& out) {
  if (rest.empty()) fail(ErrorCode::kInvalidArgument, "bounds needs a subcommand: table, abtb, tradeoff, census");
  auto integer = [&](std::size_t i) -> std::int64_t {
    if (i >= rest.size()) fail(ErrorCode::kInvalidArgument, "missing argument");
    try {
      std::size_t used = 0;
      const long long v = std::stoll(rest[i], &used);
      if (used != rest[i].size()) throw std::invalid_argument(rest[i]);
      return v;
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "expected an integer, got \"" + rest[i] + "\"");
    }
  };
  const std::string& what = rest[0];
  if (what == "table") {
    const auto t = tradeoff_table();
    if (format == "json") {
      emit(out, tradeoff_table_json(t));
    } else {
      out << tradeoff_table_csv(t);
    }
    return kOk;
  }
  if (what == "abtb") {
    const auto a = integer(1), b = integer(2);
    const Json j{{"schema", kSchema}, {"a", a}, {"b", b}, {"abtb", abtb_value(a, b)}};
    if (format == "csv") {
      out << "a,b,abtb\n" << a << ',' << b << ',' << j["abtb"].dump() << '\n';
    } else {
      emit(out, j);
    }
    return kOk;
  }
  if (what == "tradeoff") {
    const auto a = integer(1), b = integer(2);
    const auto eps = tradeoff_epsilon(a, b, delta);
    Json j{{"schema", kSchema}, {"a", a},       {"b", b},
           {"delta", delta},    {"r", eps.r},   {"beta", eps.beta},
           {"epsilon", eps.epsilon}, {"threshold", delta_threshold(a, b)}};
    if (format == "csv") {
      out << "a,b,delta,r,beta,epsilon,threshold\n"
          << a << ',' << b << ',' << j["delta"].dump() << ',' << eps.r << ',' << j["beta"].dump() << ','
          << j["epsilon"].dump() << ',' << j["threshold"].dump() << '\n';
    } else {
      emit(out, j);
    }
    return kOk;
  }
  if (what == "census") {
    const auto a = integer(1), b = integer(2), t = integer(3);
    emit(out, Json{{"schema", kSchema}, {"a", a}, {"b", b}, {"t", t},
                   {"census", big_to_json(catalan_walk_census(a, b, static_cast<int>(t)))}});
    return kOk;
  }
  fail(ErrorCode::kInvalidArgument, "unknown bounds subcommand " + what);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polygraph construction and spectral analysis toolkit", "polylab"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a graph in edge-list format");
  generate->add_option("family", gen.family,
                       "petersen | icosahedron | cycle | complete | torus | random-regular | distance-two | tensor")
      ->required();
  generate->add_option("--n", gen.n, "Vertex count (cycle, complete, random-regular) or torus width");
  generate->add_option("--m", gen.m, "Torus height");
  generate->add_option("--d", gen.d, "Degree (random-regular)");
  generate->add_option("--girth", gen.girth, "Minimum girth (random-regular)");
  auto* seed_opt = generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--max-tries", gen.max_tries, "Restarts before giving up");
  generate->add_flag("--nonbipartite", gen.nonbipartite, "Reject bipartite samples");
  generate->add_option("--input", gen.input, "Input edge list (distance-two, tensor)");
  generate->add_option("--input2", gen.input2, "Second input edge list (tensor)");
  generate->add_option("--out", gen.out, "Output path; stdout when omitted");

  PolygraphArgs poly;
  auto* polygraph = app.add_subcommand("polygraph", "Build the polygraph of a base graph");
  polygraph->add_option("input", poly.input, "Base graph edge list")->required();
  polygraph->add_option("--S", poly.s, "Distance multiset, e.g. 1,1,0")->required();
  polygraph->add_option("--out", poly.out, "Write <out>.edges and <out>.json");
  polygraph->add_flag("--allow-unsafe-girth", poly.allow_unsafe, "Build even when girth <= 3 max(S)");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Regularity, girth, spectrum and complex diagnostics");
  analyze->add_option("input", an.input, "Graph edge list")->required();
  analyze->add_flag("--aux", an.aux, "Triangle census and Aux-graph gap");
  analyze->add_flag("--require-ab", an.require_ab, "Fail unless the graph is (a,b)-regular");
  analyze->add_flag("--no-spectrum", an.no_spectrum, "Skip the adjacency spectrum");
  analyze->add_flag("--links", an.links, "Spectrum of the link of vertex 0");

  std::string link_s;
  int link_d = 3;
  auto* link = app.add_subcommand("link", "Link of the polygraph over the d-regular tree");
  link->add_option("--S", link_s, "Distance multiset, e.g. 2,4,6")->required();
  link->add_option("--d", link_d, "Tree degree");

  std::vector<std::string> bounds_rest;
  std::string format = "json";
  double delta = 0.0;
  auto* bounds = app.add_subcommand("bounds", "Lower-bound calculators: table | abtb a b | tradeoff a b | census a b t");
  bounds->add_option("args", bounds_rest, "Subcommand and integer arguments")->required();
  bounds->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--delta", delta, "Local edge expansion (tradeoff)");

  OverlapInputs overlap_in;
  std::optional<double> w_max;
  auto* overlap = app.add_subcommand("overlap", "Triangle lower bound for three tuple sets");
  overlap->add_option("--n", overlap_in.n, "Base vertex count");
  overlap->add_option("--d", overlap_in.d, "Base degree");
  overlap->add_option("--lambda", overlap_in.lambda, "Base second eigenvalue bound")->required();
  overlap->add_option("--w-max", w_max, "Cap on directed edges sharing a midpoint");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (*generate) {
      gen.seed_given = seed_opt->count() > 0;
      return cmd_generate(gen, out, err);
    }
    if (*polygraph) return cmd_polygraph(poly, out);
    if (*analyze) return cmd_analyze(an, out, err);
    if (*link) return cmd_link(link_s, link_d, out);
    if (*bounds) return cmd_bounds(bounds_rest, format, delta, out);
    if (*overlap) {
      overlap_in.w_max = w_max;
      Json j = to_json(overlap_bound_calculator(overlap_in));
      j["schema"] = kSchema;
      emit(out, j);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kValidation;
}

}  // namespace polylab::cli
