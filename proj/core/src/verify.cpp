#include "surfgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "surfgraph/canonical.hpp"
#include "surfgraph/counting.hpp"
#include "surfgraph/operations.hpp"
#include "surfgraph/orientation.hpp"
#include "surfgraph/reciprocity.hpp"

namespace surfgraph {

bool GraphReport::passed() const { return failures() == 0; }

int GraphReport::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass && !c.informational; }));
}

std::uint64_t BatchReport::failures() const {
  std::uint64_t n = 0;
  for (const auto& [name, t] : by_identity) n += t.failed;
  return n;
}

namespace {

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

class Checker {
 public:
  explicit Checker(GraphReport& report) : report_(report) {}

  // Runs `body`, which fills lhs/rhs and returns the verdict.
  void run(const std::string& name, const std::function<bool(IdentityCheck&)>& body, bool informational = false) {
    IdentityCheck c;
    c.name = name;
    c.informational = informational;
    try {
      c.pass = body(c);
    } catch (const Error& e) {
      c.pass = false;
      c.note = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  GraphReport& report_;
};

// Counts and polynomials shared between checks.
struct Facts {
  const RibbonGraph& g;
  RibbonGraph d;
  Limits limits;
  std::map<std::pair<int, int>, IntegerPolynomial> polys;  // (side, kind)

  const IntegerPolynomial& poly(int side, PolynomialKind kind) {
    const auto key = std::make_pair(side, static_cast<int>(kind));
    auto it = polys.find(key);
    if (it == polys.end()) it = polys.emplace(key, counting_polynomial(side == 0 ? g : d, kind, limits)).first;
    return it->second;
  }
};

}  // namespace

GraphReport verify_graph(const RibbonGraph& g, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GraphReport report;
  report.code = canonical_code(g);
  report.euler = g.euler_data();
  report.kmax = options.kmax;
  Checker check(report);
  Facts facts{g, dual(g), options.limits, {}};
  const Limits& limits = options.limits;
  const int kmax = options.kmax;

  // polynomial dualities, by direct counts
  struct DualityLine {
    const char* name;
    PolynomialKind primal, dual;
  };
  for (const DualityLine& line : {DualityLine{"duality.tension=balanced_flow*", PolynomialKind::Tension,
                                              PolynomialKind::BalancedFlow},
                                  DualityLine{"duality.local_tension=flow*", PolynomialKind::LocalTension,
                                              PolynomialKind::Flow},
                                  DualityLine{"duality.flow=local_tension*", PolynomialKind::Flow,
                                              PolynomialKind::LocalTension},
                                  DualityLine{"duality.balanced_flow=tension*", PolynomialKind::BalancedFlow,
                                              PolynomialKind::Tension}}) {
    check.run(line.name, [&](IdentityCheck& c) {
      std::vector<std::uint64_t> l, r;
      for (int k = 1; k <= kmax; ++k) {
        l.push_back(count_nowhere_zero(g, line.primal, k, limits));
        r.push_back(count_nowhere_zero(facts.d, line.dual, k, limits));
      }
      c.lhs = list(l);
      c.rhs = list(r);
      return l == r;
    });
  }

  // elementwise bijections through dual_orientation
  const OrientationClassifier primal(g);
  const OrientationClassifier dualc(facts.d);
  struct BijectionLine {
    const char* name;
    OrientationClass from, to;
  };
  for (const BijectionLine& line : {BijectionLine{"bijection.bao->tco*", OrientationClass::BAO, OrientationClass::TCO},
                                    BijectionLine{"bijection.ao->tbo*", OrientationClass::AO, OrientationClass::TBO}}) {
    check.run(line.name, [&](IdentityCheck& c) {
      if (g.edge_count() > limits.max_orientation_edges) throw Error(ErrorKind::TooLarge, "orientation scan");
      std::uint64_t from = 0, to = 0;
      bool elementwise = true;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
        const auto o = Orientation::from_mask(g.edge_count(), m);
        const bool a = primal.is_member(o, line.from);
        const bool b = dualc.is_member(dual_orientation(g, o), line.to);
        from += a;
        to += b;
        if (a != b) {
          elementwise = false;
          if (c.note.empty()) c.note = "first mismatch at " + o.to_string();
        }
      }
      c.lhs = std::to_string(from);
      c.rhs = std::to_string(to);
      return elementwise;
    });
  }

  // minus-one identities
  struct MinusOneLine {
    const char* name;
    PolynomialKind kind;
    OrientationClass cls;
  };
  for (const MinusOneLine& line : {MinusOneLine{"minus_one.tension=ao", PolynomialKind::Tension, OrientationClass::AO},
                                   MinusOneLine{"minus_one.local_tension=bao", PolynomialKind::LocalTension,
                                                OrientationClass::BAO},
                                   MinusOneLine{"minus_one.flow=tco", PolynomialKind::Flow, OrientationClass::TCO},
                                   MinusOneLine{"minus_one.balanced_flow=tbo", PolynomialKind::BalancedFlow,
                                                OrientationClass::TBO}}) {
    check.run(line.name, [&](IdentityCheck& c) {
      const BigInt l = abs_big(facts.poly(0, line.kind)(-1));
      const BigInt r(count_class(g, line.cls, limits));
      c.lhs = l.str();
      c.rhs = r.str();
      c.note = facts.poly(0, line.kind).to_string();
      return l == r;
    });
  }

  // reciprocity pair counts
  struct ReciprocityLine {
    const char* name;
    PolynomialKind kind;
  };
  for (const ReciprocityLine& line : {ReciprocityLine{"reciprocity.tension", PolynomialKind::Tension},
                                      ReciprocityLine{"reciprocity.flow", PolynomialKind::Flow},
                                      ReciprocityLine{"reciprocity.local_tension", PolynomialKind::LocalTension},
                                      ReciprocityLine{"reciprocity.balanced_flow", PolynomialKind::BalancedFlow}}) {
    check.run(line.name, [&](IdentityCheck& c) {
      std::vector<std::string> l, r;
      for (int k = 1; k <= kmax; ++k) {
        l.push_back(abs_big(facts.poly(0, line.kind)(-k)).str());
        r.push_back(std::to_string(reciprocity_pairs(g, line.kind, k, limits)));
      }
      c.lhs = list(l);
      c.rhs = list(r);
      return l == r;
    });
  }
  check.run("reciprocity.local_tension_signed", [&](IdentityCheck& c) {
    const int exponent = g.edge_count() - g.face_count() + g.component_count();
    std::vector<std::string> l, r;
    for (int k = 1; k <= kmax; ++k) {
      BigInt v = facts.poly(0, PolynomialKind::LocalTension)(-k);
      if (exponent % 2 != 0) v = -v;
      l.push_back(v.str());
      r.push_back(std::to_string(reciprocity_pairs(g, PolynomialKind::LocalTension, k, limits)));
    }
    c.lhs = list(l);
    c.rhs = list(r);
    return l == r;
  });

  // integral reciprocity through the fitted quasipolynomial
  if (g.edge_count() <= options.integral_max_edges) {
    check.run("integral_reciprocity", [&](IdentityCheck& c) {
      const QuasiPolynomial q = integral_local_tension_quasipolynomial(g, 6, limits);
      std::vector<std::string> l, r;
      for (int k = 0; k <= kmax; ++k) {
        Rational v = q.evaluate(-k);
        if (v < 0) v = -v;
        l.push_back(to_string(v));
        r.push_back(std::to_string(integral_local_tension_reciprocity_pairs(g, k, limits)));
      }
      c.lhs = list(l);
      c.rhs = list(r);
      c.note = "period " + std::to_string(q.period());
      return l == r;
    });
    check.run("integral_reciprocity.k0=bao", [&](IdentityCheck& c) {
      const auto l = integral_local_tension_reciprocity_pairs(g, 0, limits);
      const auto r = count_class(g, OrientationClass::BAO, limits);
      c.lhs = std::to_string(l);
      c.rhs = std::to_string(r);
      return l == r;
    });
  }

  // planar collapse, as sets
  if (g.is_planar()) {
    check.run("planar.bao=ao", [&](IdentityCheck& c) {
      const auto a = enumerate_class(g, OrientationClass::BAO, limits);
      const auto b = enumerate_class(g, OrientationClass::AO, limits);
      c.lhs = std::to_string(a.size());
      c.rhs = std::to_string(b.size());
      return a == b;
    });
    check.run("planar.tbo=tco", [&](IdentityCheck& c) {
      const auto a = enumerate_class(g, OrientationClass::TBO, limits);
      const auto b = enumerate_class(g, OrientationClass::TCO, limits);
      c.lhs = std::to_string(a.size());
      c.rhs = std::to_string(b.size());
      return a == b;
    });
  }

  // witness vectors: postconditions are asserted inside bao_witness_vector
  check.run("witness.bao", [&](IdentityCheck& c) {
    const auto bao = enumerate_class(g, OrientationClass::BAO, limits);
    for (const auto& o : bao) (void)bao_witness_vector(g, o);
    c.lhs = std::to_string(bao.size());
    c.rhs = std::to_string(bao.size());
    return true;
  });

  // consequences of the reciprocity laws
  check.run("cor.tension*(-1)=tbo", [&](IdentityCheck& c) {
    const BigInt l = abs_big(facts.poly(1, PolynomialKind::Tension)(-1));
    const BigInt r(count_class(g, OrientationClass::TBO, limits));
    c.lhs = l.str();
    c.rhs = r.str();
    return l == r;
  });
  if (g.component_count() == 1) {
    check.run("cor.unique_cw_face", [&](IdentityCheck& c) {
      const BigInt constant = abs_big(facts.poly(1, PolynomialKind::Tension).coefficient(0));
      std::vector<std::uint64_t> per_face(g.face_count(), 0);
      for (const auto& o : enumerate_class(g, OrientationClass::TBO, limits)) {
        const auto cw = cw_faces(g, o);
        if (cw.size() == 1) ++per_face[cw[0]];
      }
      c.lhs = list(per_face);
      c.rhs = constant.str();
      c.note = "signed constant term " + facts.poly(1, PolynomialKind::Tension).coefficient(0).str();
      return std::all_of(per_face.begin(), per_face.end(), [&](auto n) { return BigInt(n) == constant; });
    });
  }
  const auto histogram = [&] { return histogram_polynomial(tbo_histogram(g, limits)); };
  check.run("cor.cw_histogram=formula", [&](IdentityCheck& c) {
    const auto h = histogram();
    const auto f = tbo_generating_poly_formula(g, VertexCountReading::Dual, limits);
    c.lhs = h.to_string("q");
    c.rhs = f.to_string("q");
    return h == f;
  });
  check.run(
      "cor.cw_histogram=formula_primal_reading",
      [&](IdentityCheck& c) {
        const auto h = histogram();
        const auto f = tbo_generating_poly_formula(g, VertexCountReading::Primal, limits);
        c.lhs = h.to_string("q");
        c.rhs = f.to_string("q");
        return h == f;
      },
      true);

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

BatchReport verify_corpus(const std::vector<RibbonGraph>& corpus, const VerifyOptions& options, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  BatchReport batch;
  batch.kmax = options.kmax;
  batch.graphs.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) batch.graphs[i] = verify_graph(corpus[i], options);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& r : batch.graphs) {
    for (const auto& c : r.checks) {
      if (c.informational) continue;
      auto& t = batch.by_identity[c.name];
      (c.pass ? t.passed : t.failed) += 1;
    }
  }
  batch.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return batch;
}

BatchReport verify_batch(const CorpusSpec& spec, const VerifyOptions& options, int jobs) {
  auto batch = verify_corpus(generate(spec, jobs, options.limits), options, jobs);
  batch.spec = spec;
  return batch;
}

namespace {

nlohmann::ordered_json graph_json(const GraphReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j{{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (c.informational) j["informational"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  const auto& e = r.euler;
  return {{"code", r.code},
          {"euler", {{"V", e.v_count}, {"E", e.e_count}, {"F", e.f_count}, {"c", e.components}, {"g", e.genus}}},
          {"kmax", r.kmax},
          {"passed", r.passed()},
          {"checks", std::move(checks)},
          {"seconds", r.seconds}};
}

}  // namespace

std::string report_to_json(const GraphReport& r) { return graph_json(r).dump(2); }

std::string report_to_json(const BatchReport& r, bool include_graphs) {
  nlohmann::ordered_json identities = nlohmann::ordered_json::object();
  for (const auto& [name, t] : r.by_identity) identities[name] = {{"passed", t.passed}, {"failed", t.failed}};
  nlohmann::ordered_json failing = nlohmann::ordered_json::array();
  for (const auto& g : r.graphs) {
    if (!g.passed()) failing.push_back(graph_json(g));
  }
  nlohmann::ordered_json spec{{"edges", r.spec.edges}, {"planar", r.spec.planar_only},
                              {"connected", r.spec.connected}, {"dedupe", r.spec.dedupe}};
  if (r.spec.genus) spec["genus"] = *r.spec.genus;
  nlohmann::ordered_json doc{{"spec", std::move(spec)},
                             {"kmax", r.kmax},
                             {"graphs", r.graphs.size()},
                             {"failures", r.failures()},
                             {"identities", std::move(identities)},
                             {"failing", std::move(failing)},
                             {"seconds", r.seconds}};
  if (include_graphs) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& g : r.graphs) all.push_back(graph_json(g));
    doc["reports"] = std::move(all);
  }
  return doc.dump(2);
}

}  // namespace surfgraph
