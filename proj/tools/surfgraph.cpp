// Command-line front end. JSON results go to stdout, a short human summary
// to stderr. Exit codes: 2 bad input, 3 guard exceeded, 4 identity failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfgraph/boundary.hpp"
#include "surfgraph/canonical.hpp"
#include "surfgraph/counting.hpp"
#include "surfgraph/generator.hpp"
#include "surfgraph/map_io.hpp"
#include "surfgraph/operations.hpp"
#include "surfgraph/orientation.hpp"
#include "surfgraph/reciprocity.hpp"
#include "surfgraph/verify.hpp"

namespace {

using namespace surfgraph;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitFailed = 4;

struct Options {
  std::string map_path;
  std::string kind = "tension";
  std::string cls = "ao";
  std::string orientation;
  std::string out;
  int k = 3;
  int kmax = 3;
  int edges = 3;
  std::optional<int> genus;
  bool planar = false;
  bool no_dedupe = false;
  bool all_reports = false;
  int jobs = 1;
};

ordered_json parsed(const std::string& text) { return ordered_json::parse(text); }

ordered_json euler_json(const EulerData& e) {
  return {{"V", e.v_count}, {"E", e.e_count}, {"F", e.f_count}, {"c", e.components}, {"g", e.genus}};
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_info(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  std::vector<EdgeId> bridges, single_face, loops;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeId one[] = {e};
    if (delete_edges(g, one).component_count() > g.component_count()) bridges.push_back(e);
    if (g.is_single_face_edge(e)) single_face.push_back(e);
    if (g.is_loop(e)) loops.push_back(e);
  }
  ordered_json faces = ordered_json::array();
  for (const auto& f : g.face_cycles()) faces.push_back(f);
  emit({{"euler", euler_json(g.euler_data())},
        {"planar", g.is_planar()},
        {"bridges", bridges},
        {"single_face_edges", single_face},
        {"loops", loops},
        {"faces", faces},
        {"code", canonical_code(g)}});
  const auto e = g.euler_data();
  std::cerr << "V=" << e.v_count << " E=" << e.e_count << " F=" << e.f_count << " c=" << e.components
            << " g=" << e.genus << '\n';
  return 0;
}

int cmd_dual(const Options& opt) {
  const auto d = dual(read_map_file(opt.map_path));
  if (!opt.out.empty()) {
    write_map_file(d, opt.out);
    std::cerr << "dual written to " << opt.out << '\n';
  }
  emit(parsed(map_to_json(d)));
  return 0;
}

int cmd_count(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  const auto c = parse_orientation_class(opt.cls);
  const auto n = count_class(g, c);
  emit({{"class", std::string(to_string(c))}, {"count", n}});
  std::cerr << "|" << to_string(c) << "| = " << n << '\n';
  return 0;
}

int cmd_poly(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  const auto kind = parse_polynomial_kind(opt.kind);
  const auto p = counting_polynomial(g, kind);
  emit({{"kind", std::string(to_string(kind))}, {"coefficients", parsed(polynomial_to_json(p))}});
  std::cerr << to_string(kind) << "(k) = " << p.to_string() << '\n';
  return 0;
}

int cmd_integral(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  const auto kind = parse_polynomial_kind(opt.kind);
  std::uint64_t n = 0;
  if (kind == PolynomialKind::LocalTension) {
    n = count_integral_local_tensions(g, opt.k);
  } else if (kind == PolynomialKind::Flow) {
    n = count_integral_flows(g, opt.k);
  } else {
    throw Error(ErrorKind::Parse, "integral counts exist for local-tension and flow only");
  }
  ordered_json j{{"kind", std::string(to_string(kind))}, {"k", opt.k}, {"count", n}};
  if (kind == PolynomialKind::LocalTension) {
    j["quasipolynomial"] = parsed(quasipolynomial_to_json(integral_local_tension_quasipolynomial(g)));
  }
  emit(j);
  std::cerr << "integral " << to_string(kind) << " count at k=" << opt.k << ": " << n << '\n';
  return 0;
}

int cmd_reciprocity(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  ordered_json j;
  bool pass = false;
  if (opt.kind == "integral-local-tension") {
    const auto q = integral_local_tension_quasipolynomial(g);
    Rational lhs = q.evaluate(-opt.k);
    if (lhs < 0) lhs = -lhs;
    const auto pairs = integral_local_tension_reciprocity_pairs(g, opt.k);
    pass = lhs == Rational(pairs);
    j = {{"kind", opt.kind}, {"k", opt.k}, {"polynomial_side", to_string(lhs)}, {"pairs", pairs}, {"pass", pass}};
  } else {
    const auto kind = parse_polynomial_kind(opt.kind);
    const auto p = counting_polynomial(g, kind);
    BigInt lhs = p(-opt.k);
    if (lhs < 0) lhs = -lhs;
    const auto pairs = reciprocity_pairs(g, kind, opt.k);
    pass = lhs == BigInt(pairs);
    j = {{"kind", opt.kind}, {"k", opt.k}, {"polynomial_side", lhs.str()}, {"pairs", pairs}, {"pass", pass}};
  }
  emit(j);
  std::cerr << opt.kind << " reciprocity at k=" << opt.k << ": " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : kExitFailed;
}

VerifyOptions verify_options(const Options& opt) {
  VerifyOptions v;
  v.kmax = opt.kmax;
  return v;
}

int cmd_verify(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  const auto r = verify_graph(g, verify_options(opt));
  std::cout << report_to_json(r) << '\n';
  for (const auto& c : r.checks) {
    std::cerr << (c.pass ? "PASS " : (c.informational ? "INFO " : "FAIL ")) << c.name << "  " << c.lhs
              << " vs " << c.rhs << (c.note.empty() ? "" : "  (" + c.note + ")") << '\n';
  }
  return r.passed() ? 0 : kExitFailed;
}

CorpusSpec corpus_spec(const Options& opt) {
  CorpusSpec s;
  s.edges = opt.edges;
  s.genus = opt.genus;
  s.planar_only = opt.planar;
  s.dedupe = !opt.no_dedupe;
  return s;
}

int cmd_batch(const Options& opt) {
  const auto r = verify_batch(corpus_spec(opt), verify_options(opt), opt.jobs);
  std::cout << report_to_json(r, opt.all_reports) << '\n';
  std::cerr << r.graphs.size() << " maps, " << r.failures() << " failed checks, " << r.seconds << " s\n";
  return r.failures() == 0 ? 0 : kExitFailed;
}

int cmd_generate(const Options& opt) {
  const auto corpus = generate(corpus_spec(opt), opt.jobs);
  if (opt.out.empty()) {
    write_corpus(std::cout, corpus);
  } else {
    std::ofstream out(opt.out);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + opt.out);
    write_corpus(out, corpus);
  }
  ordered_json stats = ordered_json::array();
  for (const auto& [key, n] : corpus_stats(corpus)) {
    const auto& [v, e, f, c, g] = key;
    std::cerr << "V=" << v << " E=" << e << " F=" << f << " c=" << c << " g=" << g << ": " << n << '\n';
  }
  std::cerr << corpus.size() << " maps\n";
  return 0;
}

int cmd_witness(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  const auto o = Orientation::parse(opt.orientation);
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation has " + std::to_string(o.edge_count()) +
                                              " signs, map has " + std::to_string(g.edge_count()) + " edges");
  }
  const auto p = bao_witness_vector(g, o);
  emit({{"orientation", o.to_string()}, {"witness", parsed(rational_vector_to_json(p))}});
  std::cerr << "witness vector verified: kernel membership and sign pattern\n";
  return 0;
}

int cmd_cw_hist(const Options& opt) {
  const auto g = read_map_file(opt.map_path);
  const auto h = tbo_histogram(g);
  const auto hp = histogram_polynomial(h);
  const auto dual_reading = tbo_generating_poly_formula(g, VertexCountReading::Dual);
  const auto primal_reading = tbo_generating_poly_formula(g, VertexCountReading::Primal);
  const bool pass = hp == dual_reading;
  emit({{"histogram", parsed(histogram_to_json(h))},
        {"formula_dual_reading", parsed(polynomial_to_json(dual_reading))},
        {"formula_primal_reading", parsed(polynomial_to_json(primal_reading))},
        {"pass", pass}});
  std::cerr << "histogram " << hp.to_string("q") << " vs formula " << dual_reading.to_string("q") << ": "
            << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and identity checks for ribbon graphs"};
  app.require_subcommand(1);
  Options opt;

  const auto add_map = [&](CLI::App* sub) { sub->add_option("map", opt.map_path, "map file (JSON)")->required(); };
  const auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", opt.kind, "tension | flow | local-tension | balanced-flow");
  };
  const auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--edges", opt.edges, "edge count m of the generated maps");
    sub->add_option("--genus", opt.genus, "keep only this genus");
    sub->add_flag("--planar", opt.planar, "keep only planar maps");
    sub->add_flag("--no-dedupe", opt.no_dedupe, "keep isomorphic copies");
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "Euler data, bridges and single-face edges");
  add_map(info);
  auto* dual_cmd = app.add_subcommand("dual", "write the dual map");
  add_map(dual_cmd);
  dual_cmd->add_option("--out", opt.out, "output map file");
  auto* count = app.add_subcommand("count", "size of an orientation class");
  add_map(count);
  count->add_option("--class", opt.cls, "ao | tco | bao | tbo");
  auto* poly = app.add_subcommand("poly", "counting polynomial");
  add_map(poly);
  add_kind(poly);
  auto* integral = app.add_subcommand("integral", "nowhere-zero integral count with |value| < k");
  add_map(integral);
  integral->add_option("--kind", opt.kind, "local-tension | flow");
  integral->add_option("--k", opt.k, "bound k")->check(CLI::NonNegativeNumber);
  auto* recip = app.add_subcommand("reciprocity", "pair count against the polynomial at -k");
  add_map(recip);
  recip->add_option("--kind", opt.kind, "tension | flow | local-tension | balanced-flow | integral-local-tension");
  recip->add_option("--k", opt.k, "k")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "every identity on one map");
  add_map(verify);
  verify->add_option("--kmax", opt.kmax, "largest k")->check(CLI::PositiveNumber);
  auto* batch = app.add_subcommand("batch", "verify every generated map");
  add_corpus(batch);
  batch->add_option("--kmax", opt.kmax, "largest k")->check(CLI::PositiveNumber);
  batch->add_flag("--all-reports", opt.all_reports, "include passing per-map reports");
  auto* gen = app.add_subcommand("generate", "write a corpus as newline-delimited JSON");
  add_corpus(gen);
  gen->add_option("--out", opt.out, "output file (default stdout)");
  auto* witness = app.add_subcommand("witness", "region witness of a boundary acyclic orientation");
  add_map(witness);
  witness->add_option("orientation", opt.orientation, "'+'/'-' per edge")->required();
  auto* cw = app.add_subcommand("cw-hist", "cw-face histogram against the subset-sum formula");
  add_map(cw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*info) return cmd_info(opt);
    if (*dual_cmd) return cmd_dual(opt);
    if (*count) return cmd_count(opt);
    if (*poly) return cmd_poly(opt);
    if (*integral) return cmd_integral(opt);
    if (*recip) return cmd_reciprocity(opt);
    if (*verify) return cmd_verify(opt);
    if (*batch) return cmd_batch(opt);
    if (*gen) return cmd_generate(opt);
    if (*witness) return cmd_witness(opt);
    if (*cw) return cmd_cw_hist(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::TooLarge) return kExitGuard;
    return e.is_validation() ? kExitInput : EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_FAILURE;
}
