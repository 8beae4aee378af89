#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ltinfluence/graph.hpp"
#include "ltinfluence/rng.hpp"

namespace testutil {

using ltinfluence::InfluenceGraph;
using ltinfluence::UISLTParams;
using ltinfluence::WeightedEdge;

// Random valid LT instance: each node's in-neighbourhood is sampled with the
// given density and its weights are scaled to a random in-sum in
// [in_lo, in_hi], strictly below 1.
inline InfluenceGraph random_graph(int n, std::uint64_t seed, double density = 0.5,
                                   double in_lo = 0.2, double in_hi = 0.95) {
  ltinfluence::rng::Stream rng(seed);
  std::vector<WeightedEdge> edges;
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, double>> incoming;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      if (rng.next_unit() < density) incoming.push_back({i, rng.next_unit() + 0.05});
    }
    if (incoming.empty()) continue;
    double total = 0.0;
    for (auto& [i, w] : incoming) total += w;
    double target = in_lo + (in_hi - in_lo) * rng.next_unit();
    for (auto& [i, w] : incoming) edges.push_back({i, j, w * target / total});
  }
  return InfluenceGraph(n, edges);
}

inline std::vector<int> random_seed_set(int n, int max_size, ltinfluence::rng::Stream& rng) {
  int size = 1 + static_cast<int>(rng.next_below(std::min(n, max_size)));
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  for (int i = 0; i < size; ++i) {
    int j = i + static_cast<int>(rng.next_below(n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

// Uniform random attachment tree on n nodes.
inline std::vector<std::pair<int, int>> random_tree_edges(int n, std::uint64_t seed) {
  ltinfluence::rng::Stream rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rng.next_below(v)), v});
  return edges;
}

// Preferential attachment: m-clique start, each new node wires m distinct
// edges chosen proportionally to current degree.
inline std::vector<std::pair<int, int>> barabasi_albert_edges(int n, int m,
                                                              std::uint64_t seed) {
  ltinfluence::rng::Stream rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoint_pool;
  int start = m + 1;
  for (int a = 0; a < start; ++a) {
    for (int b = a + 1; b < start; ++b) {
      edges.push_back({a, b});
      endpoint_pool.push_back(a);
      endpoint_pool.push_back(b);
    }
  }
  for (int v = start; v < n; ++v) {
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < m) {
      int t = endpoint_pool[rng.next_below(endpoint_pool.size())];
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
    for (int t : picked) {
      edges.push_back({t, v});
      endpoint_pool.push_back(t);
      endpoint_pool.push_back(v);
    }
  }
  return edges;
}

// alpha_i ~ U[0,1], beta_i ~ U[0.5/S_i, 1/S_i] with S_i the sum of the other
// alphas; feasible by construction.
inline UISLTParams random_uislt(int n, std::uint64_t seed) {
  ltinfluence::rng::Stream rng(seed);
  UISLTParams p;
  p.alphas.resize(n);
  p.betas.resize(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    p.alphas[i] = rng.next_unit();
    if (p.alphas[i] == 0.0) p.alphas[i] = 0.5;
    total += p.alphas[i];
  }
  for (int i = 0; i < n; ++i) {
    double others = total - p.alphas[i];
    p.betas[i] = (0.5 + 0.5 * rng.next_unit()) / others;
  }
  return p;
}

}  // namespace testutil
