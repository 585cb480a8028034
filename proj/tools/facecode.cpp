// facecode: command-line front end.
//
// Exit codes: 0 success, 1 invalid input or inapplicable request, 2 enumeration
// budget exceeded, 3 a theorem check failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "facecode/facecode.hpp"

namespace {

using namespace facecode;
using Json = io::Json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return 2;
    case ErrorKind::TheoremViolation: return 3;
    default: return 1;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return io::read_file(path);
}

SimplePolytope load(const std::string& path) { return io::read_polytope(read_input(path)); }

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

Json ints(const std::vector<std::int64_t>& v) { return Json(v); }

std::string seq(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string facet_set(const std::vector<int>& fs) {
  std::string out = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? "," : "") + std::to_string(fs[i]);
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  bool json = false;
  std::string file;
  std::string out;
  std::string recipe;
  std::string lambda;
  std::string suite = "all";
  int k = -1;
  bool matrix = false;
  bool summary = false;
  int length = 0;
  int mindist = 0;
  bool doubly_even = false;
  std::uint64_t seed = 0;
  bool use_corpus = false;
  int seeds = 20;
  int workers = 1;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_gen(const Options& o) {
  const auto p = build_recipe(o.recipe);
  const auto text = io::write_polytope(p);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    require(static_cast<bool>(f), ErrorKind::InvalidInput, "cannot write '" + o.out + "'");
    f << text;
  }
  return 0;
}

int cmd_info(const Options& o) {
  const auto p = load(o.file);
  const auto fh = fh_vectors(p);
  Json j = envelope("info");
  j["name"] = p.name();
  j["dim"] = p.dim();
  j["facets"] = p.num_facets();
  j["vertices"] = p.num_vertices();
  j["faces_by_codim"] = ints(fh.g);
  j["h"] = ints(fh.h);
  j["even"] = is_even(p);
  j["realized"] = p.has_coords();
  std::ostringstream t;
  t << "name: " << p.name() << "\n"
    << "dim: " << p.dim() << "\n"
    << "facets: " << p.num_facets() << "\n"
    << "vertices: " << p.num_vertices() << "\n"
    << "faces by codimension: " << seq(fh.g) << "\n"
    << "h: " << seq(fh.h) << "\n"
    << "even: " << yes_no(is_even(p)) << "\n"
    << "realized: " << yes_no(p.has_coords()) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_code(const Options& o) {
  const auto p = load(o.file);
  require(o.k >= 0, ErrorKind::InvalidInput, "code needs -k");
  if (o.matrix) {
    const auto rows = code_matrix(p, o.k);
    Json j = envelope("code");
    j["k"] = o.k;
    Json m = Json::array();
    for (const auto& r : rows) m.push_back(r.to_string());
    j["matrix"] = std::move(m);
    emit(o, j, gf2::format_matrix(rows));
    return 0;
  }
  const auto fc = face_code(p, o.k);
  const auto sd = gf2::is_self_dual(fc.code);
  Json j = envelope("code");
  j["k"] = o.k;
  j["length"] = fc.code.length();
  j["dim"] = fc.code.dim();
  j["generators"] = fc.faces.size();
  j["self_dual"] = sd.self_dual;
  std::ostringstream t;
  t << "k: " << o.k << "\nlength: " << fc.code.length() << "\ndim: " << fc.code.dim() << "\ngenerators: "
    << fc.faces.size() << "\nself-dual: " << yes_no(sd.self_dual) << "\n";
  if (fc.code.dim() >= 1 && fc.code.dim() <= gf2::kEnumerationMaxDim) {
    const auto we = gf2::weight_enumerator(fc.code, o.workers);
    std::size_t d = 0;
    for (const auto& [w, c] : we.counts) {
      if (w > 0) {
        d = w;
        break;
      }
    }
    j["min_distance"] = d;
    j["doubly_even"] = we.doubly_even;
    Json enumerator = Json::object();
    t << "min distance: " << d << "\ndoubly-even: " << yes_no(we.doubly_even) << "\nweights:";
    for (const auto& [w, c] : we.counts) {
      enumerator[std::to_string(w)] = c;
      t << " " << w << ":" << c;
    }
    t << "\n";
    j["weights"] = std::move(enumerator);
  } else {
    j["doubly_even"] = gf2::is_doubly_even(fc.code);
    t << "doubly-even: " << yes_no(gf2::is_doubly_even(fc.code)) << "\n";
    if (fc.code.dim() > gf2::kEnumerationMaxDim) t << "min distance: not enumerated (dim > " << gf2::kEnumerationMaxDim << ")\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_mindist(const Options& o) {
  const auto p = load(o.file);
  require(o.k >= 0, ErrorKind::InvalidInput, "mindist needs -k");
  const auto fc = face_code(p, o.k);
  const auto d = gf2::min_distance(fc.code, o.workers);
  Json j = envelope("mindist");
  j["k"] = o.k;
  j["min_distance"] = d;
  emit(o, j, std::to_string(d) + "\n");
  return 0;
}

int cmd_color(const Options& o) {
  const auto p = load(o.file);
  Json j = envelope("color");
  std::ostringstream t;
  if (!o.lambda.empty()) {
    const auto lambda = io::read_coloring(io::read_file(o.lambda));
    check_coloring_shape(p, lambda);
    const auto components = component_count(p, lambda);
    j["rank"] = coloring_rank(lambda);
    j["components"] = components;
    t << "rank: " << coloring_rank(lambda) << "\ncomponents: " << components << "\n";
    if (lambda.r == p.dim()) {
      const bool characteristic = validate_characteristic(p, lambda);
      j["characteristic"] = characteristic;
      t << "characteristic: " << yes_no(characteristic) << "\n";
      if (characteristic) {
        const auto inv = admits_regular_m_involution(p, lambda);
        j["regular_involution"] = inv.admits;
        t << "regular m-involution: " << yes_no(inv.admits) << "\n";
        if (inv.admits) {
          j["fixed_points"] = inv.fixed_points;
          j["betti"] = ints(inv.betti);
          t << "fixed points: " << inv.fixed_points << "\nbetti: " << seq(inv.betti) << "\n";
        }
      }
    }
    emit(o, j, t.str());
    return 0;
  }
  const auto r = colorability_report(p);
  j["colorable"] = r.verdict;
  t << "colorable: " << yes_no(r.verdict) << "\n";
  if (r.coloring) {
    j["coloring"] = r.coloring->colors;
    t << "coloring:";
    for (int c : r.coloring->colors) t << " " << c;
    t << "\n";
  }
  if (!r.degenerate_dimension) {
    Json c;
    c["partition"] = r.partition;
    c["inclusion_chain"] = r.inclusion_chain;
    c["ridge_inclusion"] = r.ridge_inclusion;
    c["b1_dimension"] = r.b1_dimension;
    c["even_two_faces"] = r.even_two_faces;
    j["criteria"] = std::move(c);
    j["dim_b1"] = r.dim_b1;
    j["m_minus_n_plus_1"] = r.m_minus_n_plus_1;
    t << "perfect-cover partition: " << yes_no(r.partition) << "\n"
      << "inclusion chain: " << yes_no(r.inclusion_chain) << "\n"
      << "B_(n-2) in B_(n-1): " << yes_no(r.ridge_inclusion) << "\n"
      << "dim B_1 = m-n+1: " << yes_no(r.b1_dimension) << " (" << r.dim_b1 << " vs " << r.m_minus_n_plus_1 << ")\n"
      << "even 2-faces: " << yes_no(r.even_two_faces) << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_selfdual(const Options& o) {
  const auto p = load(o.file);
  require(o.k >= 0, ErrorKind::InvalidInput, "selfdual needs -k");
  const auto r = self_duality_report(p, o.k);
  Json j = envelope("selfdual");
  j["k"] = r.k;
  j["dim"] = r.dim;
  j["vertices"] = r.num_vertices;
  j["condition_a"] = r.cond_a;
  j["condition_b"] = r.cond_b;
  j["self_dual"] = r.direct;
  j["ones_in_code"] = r.ones_in_code;
  std::ostringstream t;
  t << "k: " << r.k << "\ndim: " << r.dim << "\nvertices: " << r.num_vertices
    << "\n(a) |V| even, dim = |V|/2: " << yes_no(r.cond_a) << "\n(b) faces of codim k..2k even: " << yes_no(r.cond_b)
    << "\nself-dual: " << yes_no(r.direct) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_screen(const Options& o) {
  const auto v = realizability_screen(o.length, o.mindist, o.doubly_even);
  Json j = envelope("screen");
  j["length"] = o.length;
  j["min_distance"] = o.mindist;
  j["doubly_even"] = o.doubly_even;
  j["verdict"] = std::string(to_string(v.status));
  if (v.witness) j["witness"] = v.witness->to_string();
  j["surviving_dimensions"] = v.surviving_dimensions;
  Json trace = Json::array();
  std::ostringstream t;
  t << to_string(v.status);
  if (v.witness) t << " " << v.witness->to_string();
  t << "\n";
  for (const auto& rule : v.trace) {
    Json r;
    r["rule"] = rule.id;
    r["fact"] = rule.citation;
    r["detail"] = rule.detail;
    trace.push_back(std::move(r));
    t << "  [" << rule.id << "] " << rule.detail << "\n    " << rule.citation << "\n";
  }
  j["trace"] = std::move(trace);
  emit(o, j, t.str());
  return 0;
}

int cmd_morse(const Options& o) {
  const auto p = load(o.file);
  require(o.k >= 0, ErrorKind::InvalidInput, "morse needs -k");
  const auto phi = generic_height(p, o.seed);
  const auto index = vertex_indices(p, phi);
  const auto hist = index_histogram(p, phi);
  const auto basis = extract_basis(p, phi, o.k);
  Json j = envelope("morse");
  j["seed"] = o.seed;
  Json obj = Json::array();
  for (const auto& c : phi.objective) obj.push_back(format_rational(c));
  j["objective"] = std::move(obj);
  j["indices"] = index;
  j["histogram"] = ints(hist);
  j["k"] = o.k;
  Json faces = Json::array();
  std::ostringstream t;
  t << "objective:";
  for (const auto& c : phi.objective) t << " " << format_rational(c);
  t << "\nindices:";
  for (int i : index) t << " " << i;
  t << "\nhistogram: " << seq(hist) << "\nbasis faces (k=" << o.k << "):\n";
  for (const auto& [v, f] : basis.selected) {
    Json e;
    e["vertex"] = v;
    e["facets"] = f.defining_facets;
    faces.push_back(std::move(e));
    t << "  vertex " << v << ": facets " << facet_set(f.defining_facets) << "\n";
  }
  j["basis"] = std::move(faces);
  j["code_dim"] = basis.code_dim;
  j["spans"] = basis.spans;
  t << "dim B_k: " << basis.code_dim << "\nspans: " << yes_no(basis.spans) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<SimplePolytope> ps;
  if (o.use_corpus) {
    ps = corpus();
  } else {
    ps.push_back(load(o.file));
  }
  const auto rep = run_suite(o.suite, ps, o.seeds);
  Json j = envelope("verify");
  j["suite"] = o.suite;
  Json checks = Json::array();
  std::ostringstream t;
  for (const auto& c : rep.checks) {
    Json e;
    e["suite"] = c.suite;
    e["subject"] = c.subject;
    e["check"] = c.check;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
    t << (c.passed ? "PASS" : "FAIL") << "  " << c.suite << "  " << c.subject << "  " << c.check;
    if (!c.detail.empty()) t << "  (" << c.detail << ")";
    t << "\n";
  }
  j["checks"] = std::move(checks);
  j["observations"] = rep.observations;
  j["failures"] = rep.failures();
  for (const auto& obs : rep.observations) t << "NOTE  " << obs << "\n";
  t << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
  emit(o, j, t.str());
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face codes of simple polytopes"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_option("--workers", o.workers, "Threads for codeword enumeration")->check(CLI::Range(1, 256));

  auto* gen = app.add_subcommand("gen", "Write the polytope JSON for a constructor recipe");
  gen->add_option("recipe", o.recipe, "e.g. \"cube 3\", \"product (polygon 6) (cube 2)\"")->required();
  gen->add_option("-o,--output", o.out, "Output file (default stdout)");

  auto* info = app.add_subcommand("info", "Basic invariants of a polytope");
  auto* code = app.add_subcommand("code", "The face code B_k");
  auto* mindist = app.add_subcommand("mindist", "Minimum distance of B_k");
  auto* color = app.add_subcommand("color", "Colorability criteria, or checks on a given coloring");
  auto* selfdual = app.add_subcommand("selfdual", "Self-duality conditions for B_k");
  auto* morse = app.add_subcommand("morse", "Generic height function and basis extraction");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  for (auto* sub : {info, code, mindist, color, selfdual, morse, verify}) {
    sub->add_option("file", o.file, "Polytope JSON (default or '-': stdin)");
  }
  for (auto* sub : {code, mindist, selfdual, morse}) {
    sub->add_option("-k", o.k, "Codimension")->required()->check(CLI::NonNegativeNumber);
  }
  auto* as_matrix = code->add_flag("--matrix", o.matrix, "Print the code matrix M_k");
  auto* as_summary = code->add_flag("--summary", o.summary, "Print dimension and weights (default)");
  as_matrix->excludes(as_summary);
  color->add_option("--lambda", o.lambda, "VectorColoring JSON to check");

  auto* screen = app.add_subcommand("screen", "Realizability screen for a self-dual code");
  screen->add_option("--length", o.length, "Code length l")->required();
  screen->add_option("--mindist", o.mindist, "Minimum distance d")->required();
  screen->add_flag("--doubly-even", o.doubly_even, "Require a doubly-even code");

  morse->add_option("--seed", o.seed, "Random seed")->required();

  verify->add_flag("--corpus", o.use_corpus, "Use the built-in corpus instead of a file");
  verify->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"colorability", "selfdual", "duality", "morse", "screen", "conjecture", "all"}));
  verify->add_option("--seeds", o.seeds, "Height functions per polytope in the morse suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "gen") return cmd_gen(o);
    if (name == "info") return cmd_info(o);
    if (name == "code") return cmd_code(o);
    if (name == "mindist") return cmd_mindist(o);
    if (name == "color") return cmd_color(o);
    if (name == "selfdual") return cmd_selfdual(o);
    if (name == "screen") return cmd_screen(o);
    if (name == "morse") return cmd_morse(o);
    if (name == "verify") return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return 1;
}
