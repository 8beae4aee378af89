#include "ltinfluence/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ltinfluence {

namespace {

std::string edge_str(int src, int dst) {
  std::ostringstream os;
  os << "(" << src << ", " << dst << ")";
  return os.str();
}

}  // namespace

InfluenceGraph::InfluenceGraph(int node_count, std::span<const WeightedEdge> edges,
                               std::vector<std::string> labels)
    : n_(node_count), labels_(std::move(labels)) {
  if (n_ < 0) throw std::invalid_argument("node count must be non-negative");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match node count");

  std::vector<WeightedEdge> sorted(edges.begin(), edges.end());
  for (const auto& e : sorted) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_)
      throw std::invalid_argument("edge " + edge_str(e.src, e.dst) + " out of range");
    if (e.src == e.dst)
      throw std::invalid_argument("self-loop " + edge_str(e.src, e.dst) +
                                  " cannot be stored; self-loops are derived");
  }
  std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].src == sorted[k - 1].src && sorted[k].dst == sorted[k - 1].dst)
      throw std::invalid_argument("duplicate edge " + edge_str(sorted[k].src, sorted[k].dst));
  }

  out_offset_.assign(n_ + 1, 0);
  in_offset_.assign(n_ + 1, 0);
  in_sum_.assign(n_, 0.0);
  out_sum_.assign(n_, 0.0);
  edge_dst_.reserve(sorted.size());
  edge_w_.reserve(sorted.size());

  for (const auto& e : sorted) ++out_offset_[e.src + 1];
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  for (const auto& e : sorted) {
    edge_dst_.push_back(e.dst);
    edge_w_.push_back(e.weight);
    out_sum_[e.src] += e.weight;
  }

  // Reverse CSR, sources ascending within each target.
  for (const auto& e : sorted) ++in_offset_[e.dst + 1];
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
  in_src_.assign(sorted.size(), 0);
  in_w_.assign(sorted.size(), 0.0);
  std::vector<int> cursor(in_offset_.begin(), in_offset_.end() - 1);
  for (const auto& e : sorted) {
    int slot = cursor[e.dst]++;
    in_src_[slot] = e.src;
    in_w_[slot] = e.weight;
  }
  for (int j = 0; j < n_; ++j) {
    double s = 0.0;
    for (double w : in_weights(j)) s += w;
    in_sum_[j] = s;
  }
}

double InfluenceGraph::weight(int src, int dst) const {
  auto targets = out_targets(src);
  auto it = std::lower_bound(targets.begin(), targets.end(), dst);
  if (it == targets.end() || *it != dst) return 0.0;
  return out_weights(src)[it - targets.begin()];
}

std::vector<WeightedEdge> InfluenceGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_dst_.size());
  for (int i = 0; i < n_; ++i) {
    auto t = out_targets(i);
    auto w = out_weights(i);
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back({i, t[k], w[k]});
  }
  return out;
}

TransitionMatrix::TransitionMatrix(int node_count, std::vector<int> offsets,
                                   std::vector<int> targets, std::vector<double> probs)
    : n_(node_count), offset_(std::move(offsets)), targets_(std::move(targets)),
      probs_(std::move(probs)) {}

double TransitionMatrix::row_sum(int j) const {
  double s = 0.0;
  for (double p : row_probs(j)) s += p;
  return s;
}

double TransitionMatrix::self_loop(int j) const {
  auto t = row_targets(j);
  auto it = std::lower_bound(t.begin(), t.end(), j);
  if (it == t.end() || *it != j) return 0.0;
  return row_probs(j)[it - t.begin()];
}

std::vector<Violation> validate_graph(const InfluenceGraph& g) {
  std::vector<Violation> report;
  for (int i = 0; i < g.node_count(); ++i) {
    auto targets = g.out_targets(i);
    auto weights = g.out_weights(i);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      double w = weights[k];
      if (std::isnan(w)) {
        Violation v{"nan", i, targets[k], -1, w, ""};
        v.message = "edge " + edge_str(i, targets[k]) + " has NaN weight";
        report.push_back(std::move(v));
      } else if (w < -kTolerance || w > 1.0 + kTolerance) {
        Violation v{"weight-range", i, targets[k], -1, w, ""};
        std::ostringstream os;
        os << "edge " << edge_str(i, targets[k]) << " weight " << w << " outside [0, 1]";
        v.message = os.str();
        report.push_back(std::move(v));
      }
    }
  }
  for (int j = 0; j < g.node_count(); ++j) {
    double s = g.in_sum(j);
    if (std::isnan(s) || s > 1.0 + kTolerance) {
      Violation v{"in-sum", -1, -1, j, s, ""};
      std::ostringstream os;
      os << "node " << j << " in-sum " << s << " exceeds 1";
      v.message = os.str();
      report.push_back(std::move(v));
    }
  }
  return report;
}

TransitionMatrix make_transition_matrix(const InfluenceGraph& g) {
  auto report = validate_graph(g);
  if (!report.empty())
    throw ValidationError("invalid influence graph: " + report.front().message, report);

  int n = g.node_count();
  std::vector<int> offsets(n + 1, 0);
  std::vector<int> targets;
  std::vector<double> probs;
  targets.reserve(g.edge_count() + n);
  probs.reserve(g.edge_count() + n);

  for (int j = 0; j < n; ++j) {
    double stay = 1.0 - g.in_sum(j);
    if (stay < 0.0) stay = 0.0;  // in-sum within tolerance of 1
    auto src = g.in_sources(j);
    auto w = g.in_weights(j);
    bool placed = false;
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (!placed && src[k] > j && stay > 0.0) {
        targets.push_back(j);
        probs.push_back(stay);
        placed = true;
      }
      targets.push_back(src[k]);
      probs.push_back(w[k]);
    }
    if (!placed && stay > 0.0) {
      targets.push_back(j);
      probs.push_back(stay);
    }
    offsets[j + 1] = static_cast<int>(targets.size());
  }
  return TransitionMatrix(n, std::move(offsets), std::move(targets), std::move(probs));
}

InfluenceGraph normalize_adjacency(int node_count,
                                   std::span<const std::pair<int, int>> undirected_edges) {
  std::vector<std::set<int>> nbr(node_count);
  for (auto [a, b] : undirected_edges) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count)
      throw std::invalid_argument("adjacency edge " + edge_str(a, b) + " out of range");
    if (a == b)
      throw std::invalid_argument("adjacency has self-loop at node " + std::to_string(a));
    nbr[a].insert(b);
    nbr[b].insert(a);
  }
  for (int v = 0; v < node_count; ++v) {
    if (nbr[v].empty())
      throw std::invalid_argument("node " + std::to_string(v) +
                                  " is isolated; degree normalization divides by zero");
  }

  // Column j gets weight 1/d_j from each neighbour; the largest neighbour
  // index takes 1 - (sum of the others) so the column sums to exactly 1.
  std::vector<WeightedEdge> edges;
  for (int j = 0; j < node_count; ++j) {
    const auto& col = nbr[j];
    int d = static_cast<int>(col.size());
    double share = 1.0 / static_cast<double>(d);
    double partial = 0.0;
    int k = 0;
    for (int i : col) {
      double w;
      if (k + 1 < d) {
        w = share;
        partial += w;
      } else {
        w = 1.0 - partial;
      }
      edges.push_back({i, j, w});
      ++k;
    }
  }
  return InfluenceGraph(node_count, edges);
}

void check_uislt_feasible(const UISLTParams& params) {
  if (params.alphas.size() != params.betas.size())
    throw std::invalid_argument("alphas and betas must have equal length");
  if (params.alphas.empty()) throw std::invalid_argument("UISLT parameters are empty");
  double alpha_total = 0.0;
  for (std::size_t i = 0; i < params.alphas.size(); ++i) {
    double a = params.alphas[i];
    if (!(a >= 0.0))
      throw std::invalid_argument("alpha[" + std::to_string(i) + "] must be >= 0");
    alpha_total += a;
  }
  for (std::size_t i = 0; i < params.betas.size(); ++i) {
    double b = params.betas[i];
    if (!(b > 0.0))
      throw std::invalid_argument("beta[" + std::to_string(i) + "] must be > 0");
    double others = alpha_total - params.alphas[i];
    if (others * b > 1.0 + kTolerance) {
      std::ostringstream os;
      os << "infeasible UISLT parameters at node " << i << ": sum of other alphas " << others
         << " exceeds 1/beta = " << 1.0 / b;
      throw std::invalid_argument(os.str());
    }
  }
}

InfluenceGraph build_uislt(const UISLTParams& params) {
  check_uislt_feasible(params);
  int n = static_cast<int>(params.alphas.size());
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double w = params.alphas[i] * params.betas[j];
      if (w > 0.0) edges.push_back({i, j, w});
    }
  }
  return InfluenceGraph(n, edges);
}

// --- Coauthorship -----------------------------------------------------------

CoauthWeights accumulate_coauthorship(std::span<const CoauthRecord> records) {
  CoauthWeights out;

  // First pass: author universe from usable records, ids in sorted-label
  // order so the mapping does not depend on record order.
  std::set<std::string> names;
  for (const auto& rec : records) {
    std::set<std::string> distinct(rec.authors.begin(), rec.authors.end());
    if (distinct.size() < 2) continue;
    names.insert(distinct.begin(), distinct.end());
  }
  out.authors.assign(names.begin(), names.end());
  std::map<std::string, int> id;
  for (int i = 0; i < static_cast<int>(out.authors.size()); ++i) id[out.authors[i]] = i;

  // Per-pair contribution counts keyed by denominator (n_r - 1); summing
  // count/denominator in ascending denominator order makes the accumulated
  // strength independent of record order down to the last bit.
  std::map<std::pair<int, int>, std::map<int, std::int64_t>> contributions;
  for (const auto& rec : records) {
    std::set<std::string> distinct(rec.authors.begin(), rec.authors.end());
    if (distinct.size() < rec.authors.size())
      out.warnings.push_back("record " + rec.paper_id + ": duplicate author removed");
    if (distinct.size() < 2) {
      out.warnings.push_back("record " + rec.paper_id + ": fewer than 2 authors, skipped");
      continue;
    }
    std::vector<int> ids;
    ids.reserve(distinct.size());
    for (const auto& name : distinct) ids.push_back(id.at(name));
    int denom = static_cast<int>(ids.size()) - 1;
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        ++contributions[{std::min(ids[a], ids[b]), std::max(ids[a], ids[b])}][denom];
  }
  // Warnings sorted for record-order independence of the full result.
  std::sort(out.warnings.begin(), out.warnings.end());

  for (const auto& [pair, by_denom] : contributions) {
    double w = 0.0;
    for (const auto& [denom, count] : by_denom)
      w += static_cast<double>(count) * (1.0 / static_cast<double>(denom));
    out.raw[pair] = w;
  }
  return out;
}

namespace {

// Per-source normalization followed by a column rescale for any in-sum that
// still exceeds 1. Input is a directed raw weight map.
InfluenceGraph normalize_raw(int n, const std::map<std::pair<int, int>, double>& raw,
                             std::vector<std::string> labels) {
  std::vector<double> row_total(n, 0.0);
  for (const auto& [e, w] : raw) row_total[e.first] += w;

  std::vector<double> col_total(n, 0.0);
  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  for (const auto& [e, w] : raw) {
    if (w <= 0.0) continue;
    double v = w / row_total[e.first];
    edges.push_back({e.first, e.second, v});
    col_total[e.second] += v;
  }
  for (auto& e : edges) {
    if (col_total[e.dst] > 1.0) e.weight /= col_total[e.dst];
  }
  return InfluenceGraph(n, edges, std::move(labels));
}

}  // namespace

InfluenceGraph coauthorship_graph(const CoauthWeights& weights) {
  int n = static_cast<int>(weights.authors.size());
  std::map<std::pair<int, int>, double> directed;
  for (const auto& [pair, w] : weights.raw) {
    directed[{pair.first, pair.second}] = w;
    directed[{pair.second, pair.first}] = w;
  }
  return normalize_raw(n, directed, weights.authors);
}

InfluenceGraph directed_coauthorship_graph(const CoauthWeights& weights) {
  int n = static_cast<int>(weights.authors.size());
  std::map<std::pair<int, int>, double> directed;
  for (const auto& [pair, w] : weights.raw) {
    // pair.first < pair.second: the higher index owns the strength.
    directed[{pair.second, pair.first}] = w;
  }
  return normalize_raw(n, directed, weights.authors);
}

InfluenceGraph ingest_coauthorship(std::span<const CoauthRecord> records,
                                   std::vector<std::string>* warnings) {
  CoauthWeights w = accumulate_coauthorship(records);
  if (warnings) *warnings = w.warnings;
  return coauthorship_graph(w);
}

InfluenceGraph direct_coauthorship(std::span<const CoauthRecord> records,
                                   std::vector<std::string>* warnings) {
  CoauthWeights w = accumulate_coauthorship(records);
  if (warnings) *warnings = w.warnings;
  return directed_coauthorship_graph(w);
}

}  // namespace ltinfluence
