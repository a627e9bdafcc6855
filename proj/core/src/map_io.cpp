#include "surfgraph/map_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace surfgraph {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Dart as_dart(const json& j) {
  if (!j.is_number_integer()) parse_error("dart ids must be integers, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > INT32_MAX) parse_error("dart id out of range: " + j.dump());
  return static_cast<Dart>(v);
}

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  const json& a = j.at(field);
  if (!a.is_array()) parse_error(std::string("labels.") + field + " must be an array");
  std::vector<std::string> out;
  for (const auto& s : a) {
    if (!s.is_string()) parse_error(std::string("labels.") + field + " must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

RibbonGraph from_json(const json& doc) {
  if (!doc.is_object()) parse_error("map document must be a JSON object");
  if (!doc.contains("sigma") || !doc.at("sigma").is_array()) parse_error("missing array field 'sigma'");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) parse_error("missing array field 'edges'");

  std::vector<std::vector<Dart>> rotations;
  for (const auto& cyc : doc.at("sigma")) {
    if (!cyc.is_array()) parse_error("each sigma entry must be an array of darts");
    std::vector<Dart> r;
    for (const auto& d : cyc) r.push_back(as_dart(d));
    rotations.push_back(std::move(r));
  }
  std::vector<EdgeEnds> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) parse_error("each edge must be a [tail, head] pair, got " + e.dump());
    edges.push_back({as_dart(e[0]), as_dart(e[1])});
  }
  Labels labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_object()) parse_error("'labels' must be an object");
    labels.vertices = string_list(l, "vertices");
    labels.edges = string_list(l, "edges");
    labels.faces = string_list(l, "faces");
  }
  return RibbonGraph::build(std::move(rotations), std::move(edges), std::move(labels));
}

json to_json(const RibbonGraph& g) {
  json doc;
  doc["sigma"] = g.vertex_cycles();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.tail, e.head});
  doc["edges"] = std::move(edges);
  const Labels& l = g.labels();
  if (!l.empty()) {
    json labels = json::object();
    if (!l.vertices.empty()) labels["vertices"] = l.vertices;
    if (!l.edges.empty()) labels["edges"] = l.edges;
    if (!l.faces.empty()) labels["faces"] = l.faces;
    doc["labels"] = std::move(labels);
  }
  return doc;
}

json big(const BigInt& v) {
  constexpr std::int64_t safe = std::int64_t{1} << 53;
  if (v > -safe && v < safe) return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace

RibbonGraph parse_map(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  return from_json(doc);
}

RibbonGraph read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str());
}

std::string map_to_json(const RibbonGraph& g) { return to_json(g).dump(); }

void write_map_file(const RibbonGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << to_json(g).dump(2) << '\n';
}

void write_corpus(std::ostream& out, const std::vector<RibbonGraph>& corpus) {
  for (const auto& g : corpus) out << map_to_json(g) << '\n';
}

std::vector<RibbonGraph> read_corpus(std::istream& in) {
  std::vector<RibbonGraph> corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    corpus.push_back(parse_map(line));
  }
  return corpus;
}

std::string polynomial_to_json(const IntegerPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(big(c));
  return a.dump();
}

std::string quasipolynomial_to_json(const QuasiPolynomial& q) {
  json constituents = json::array();
  for (const auto& c : q.constituents()) {
    json row = json::array();
    for (const auto& r : c) row.push_back(to_string(r));
    constituents.push_back(std::move(row));
  }
  return json{{"period", q.period()}, {"constituents", std::move(constituents)}}.dump();
}

std::string histogram_to_json(const CwFaceHistogram& h) {
  json o = json::object();
  for (const auto& [j, n] : h) o[std::to_string(j)] = n;
  return o.dump();
}

std::string rational_vector_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a.dump();
}

}  // namespace surfgraph
