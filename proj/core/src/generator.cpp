#include "surfgraph/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "surfgraph/canonical.hpp"

namespace surfgraph {

namespace {

int cycle_count(const std::vector<Dart>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int n = 0;
  for (std::size_t d = 0; d < perm.size(); ++d) {
    if (seen[d]) continue;
    ++n;
    for (Dart x = static_cast<Dart>(d); !seen[x]; x = perm[x]) seen[x] = true;
  }
  return n;
}

bool is_connected(const std::vector<Dart>& sigma) {
  // darts reachable from 0 under sigma and the fixed pairing d ↦ d^1
  std::vector<bool> seen(sigma.size(), false);
  std::vector<Dart> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (const Dart n : {sigma[d], static_cast<Dart>(d ^ 1)}) {
      if (!seen[n]) {
        seen[n] = true;
        ++reached;
        stack.push_back(n);
      }
    }
  }
  return reached == sigma.size();
}

RibbonGraph build_from(const std::vector<Dart>& sigma) {
  std::vector<std::vector<Dart>> rotations;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t d = 0; d < sigma.size(); ++d) {
    if (seen[d]) continue;
    std::vector<Dart> cyc;
    for (Dart x = static_cast<Dart>(d); !seen[x]; x = sigma[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    rotations.push_back(std::move(cyc));
  }
  std::vector<EdgeEnds> edges;
  for (Dart d = 0; d + 1 < static_cast<Dart>(sigma.size()); d += 2) edges.push_back({d, d + 1});
  return RibbonGraph::build(std::move(rotations), std::move(edges));
}

struct Candidate {
  std::string code;
  std::vector<Dart> sigma;
};

std::vector<Candidate> scan(const CorpusSpec& spec, Dart image_of_zero) {
  const int n = 2 * spec.edges;
  std::vector<Dart> alpha(n), phi(n);
  for (Dart d = 0; d < n; ++d) alpha[d] = d ^ 1;
  std::vector<Dart> rest;
  for (Dart d = 0; d < n; ++d) {
    if (d != image_of_zero) rest.push_back(d);
  }
  std::vector<Candidate> out;
  std::vector<Dart> sigma(n);
  do {
    sigma[0] = image_of_zero;
    std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
    const bool connected = is_connected(sigma);
    if (spec.connected && !connected) continue;
    if (spec.genus || spec.planar_only) {
      for (Dart d = 0; d < n; ++d) phi[d] = sigma[alpha[d]];
      int components = 1;
      if (!connected) {
        // count components of the group generated by sigma and alpha
        std::vector<int> comp(n, -1);
        components = 0;
        for (Dart s = 0; s < n; ++s) {
          if (comp[s] >= 0) continue;
          std::vector<Dart> stack{s};
          comp[s] = components;
          while (!stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            for (const Dart x : {sigma[d], alpha[d]}) {
              if (comp[x] < 0) {
                comp[x] = components;
                stack.push_back(x);
              }
            }
          }
          ++components;
        }
      }
      const int chi = cycle_count(sigma) - spec.edges + cycle_count(phi);
      const int genus = (2 * components - chi) / 2;
      if (spec.planar_only && genus != 0) continue;
      if (spec.genus && genus != *spec.genus) continue;
    }
    out.push_back({spec.dedupe ? canonical_code(sigma, alpha) : std::string(), sigma});
  } while (std::next_permutation(rest.begin(), rest.end()));
  if (spec.dedupe) {
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code == b.code; }),
              out.end());
  }
  return out;
}

}  // namespace

std::vector<RibbonGraph> generate(const CorpusSpec& spec, int jobs, const Limits& limits) {
  if (spec.edges < 0) throw Error(ErrorKind::TooLarge, "edge count must be nonnegative");
  if (spec.edges > limits.max_generator_edges) {
    throw Error(ErrorKind::TooLarge, "generator refuses m=" + std::to_string(spec.edges) + " (limit " +
                                         std::to_string(limits.max_generator_edges) + ")");
  }
  if (spec.edges == 0) {
    if (spec.genus && *spec.genus != 0) return {};
    return {RibbonGraph::build({{}}, {})};
  }

  const int n = 2 * spec.edges;
  std::vector<std::vector<Candidate>> parts(n);
  const int workers = std::clamp(jobs, 1, n);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (int j = w; j < n; j += workers) parts[j] = scan(spec, j);
    });
  }
  for (auto& t : threads) t.join();

  std::vector<Candidate> all;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  if (spec.dedupe) {
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    all.erase(std::unique(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.code == b.code; }),
              all.end());
  }
  std::vector<RibbonGraph> corpus;
  corpus.reserve(all.size());
  for (const auto& c : all) corpus.push_back(build_from(c.sigma));
  return corpus;
}

CorpusStats corpus_stats(const std::vector<RibbonGraph>& corpus) {
  CorpusStats stats;
  for (const auto& g : corpus) {
    const auto e = g.euler_data();
    ++stats[{e.v_count, e.e_count, e.f_count, e.components, e.genus}];
  }
  return stats;
}

}  // namespace surfgraph
