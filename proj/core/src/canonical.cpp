#include "surfgraph/canonical.hpp"

#include <algorithm>
#include <vector>

namespace surfgraph {

namespace {

// Breadth-first relabelling from `root`; returns the flattened
// (sigma, alpha) table in new labels, or stops early once it is already
// larger than `best`.
bool relabel(std::span<const Dart> sigma, std::span<const Dart> alpha, Dart root, int size,
             std::vector<Dart>& label, std::vector<Dart>& order, std::vector<Dart>& code,
             const std::vector<Dart>* best) {
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  code.clear();
  label[root] = 0;
  order.push_back(root);
  bool tied = best != nullptr;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart d = order[i];
    for (const Dart next : {sigma[d], alpha[d]}) {
      if (label[next] == -1) {
        label[next] = static_cast<Dart>(order.size());
        order.push_back(next);
      }
      code.push_back(label[next]);
      if (tied) {
        const Dart b = (*best)[code.size() - 1];
        if (code.back() > b) return false;
        if (code.back() < b) tied = false;
      }
    }
  }
  return static_cast<int>(order.size()) == size;
}

std::string encode(const std::vector<Dart>& code) {
  std::string s = "[";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(code[i]);
  }
  return s + "]";
}

}  // namespace

std::string canonical_code(std::span<const Dart> sigma, std::span<const Dart> alpha, int isolated) {
  const auto n = static_cast<Dart>(sigma.size());
  // components of the dart graph generated by sigma and alpha
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Dart>> members;
  for (Dart s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int c = static_cast<int>(members.size());
    auto& m = members.emplace_back();
    comp[s] = c;
    m.push_back(s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (const Dart next : {sigma[m[i]], alpha[m[i]]}) {
        if (comp[next] == -1) {
          comp[next] = c;
          m.push_back(next);
        }
      }
    }
  }

  std::vector<std::string> parts;
  std::vector<Dart> label(n), order, code, best;
  for (const auto& m : members) {
    best.clear();
    for (const Dart root : m) {
      if (relabel(sigma, alpha, root, static_cast<int>(m.size()), label, order, code,
                  best.empty() ? nullptr : &best)) {
        if (best.empty() || code < best) best = code;
      }
    }
    parts.push_back(encode(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "v" + std::to_string(isolated);
  for (const auto& p : parts) out += p;
  return out;
}

std::string canonical_code(const RibbonGraph& g) {
  std::vector<Dart> sigma(g.dart_count()), alpha(g.dart_count());
  for (Dart d = 0; d < g.dart_count(); ++d) {
    sigma[d] = g.sigma(d);
    alpha[d] = g.alpha(d);
  }
  int isolated = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) isolated += g.vertex_darts(v).empty() ? 1 : 0;
  return canonical_code(sigma, alpha, isolated);
}

}  // namespace surfgraph
