#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltinfluence {

inline constexpr const char* kVersion = "0.1.0";

// Absolute tolerance for feasibility and stochasticity checks.
inline constexpr double kTolerance = 1e-9;

struct WeightedEdge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
};

struct Violation {
  std::string kind;     // "weight-range" | "in-sum" | "nan"
  int src = -1;         // offending edge, when applicable
  int dst = -1;
  int node = -1;        // offending node, when applicable
  double value = 0.0;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string what, std::vector<Violation> violations)
      : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Weighted directed influence graph. w(i,j) is the influence of i on j; a
// valid LT instance keeps every in-sum b_j = sum_i w(i,j) at most 1. Edges
// are stored sparsely in CSR form, in both directions, and the structure is
// immutable after construction (safe for concurrent reads). Self-loops are
// never stored; the transition matrix derives them.
class InfluenceGraph {
 public:
  InfluenceGraph() = default;
  InfluenceGraph(int node_count, std::span<const WeightedEdge> edges,
                 std::vector<std::string> labels = {});

  int node_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edge_dst_.size()); }

  int out_degree(int i) const { return out_offset_[i + 1] - out_offset_[i]; }
  int in_degree(int j) const { return in_offset_[j + 1] - in_offset_[j]; }

  std::span<const int> out_targets(int i) const {
    return {edge_dst_.data() + out_offset_[i], edge_dst_.data() + out_offset_[i + 1]};
  }
  std::span<const double> out_weights(int i) const {
    return {edge_w_.data() + out_offset_[i], edge_w_.data() + out_offset_[i + 1]};
  }
  std::span<const int> in_sources(int j) const {
    return {in_src_.data() + in_offset_[j], in_src_.data() + in_offset_[j + 1]};
  }
  std::span<const double> in_weights(int j) const {
    return {in_w_.data() + in_offset_[j], in_w_.data() + in_offset_[j + 1]};
  }

  // Total incoming weight b_j(N \ {j}); also the b_j(A) building block.
  double in_sum(int j) const { return in_sum_[j]; }
  double out_sum(int i) const { return out_sum_[i]; }

  // Stored weight, 0.0 when the edge is absent.
  double weight(int src, int dst) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  std::vector<WeightedEdge> edges() const;

 private:
  int n_ = 0;
  std::vector<int> out_offset_{0};
  std::vector<int> edge_dst_;
  std::vector<double> edge_w_;
  std::vector<int> in_offset_{0};
  std::vector<int> in_src_;
  std::vector<double> in_w_;
  std::vector<double> in_sum_;
  std::vector<double> out_sum_;
  std::vector<std::string> labels_;
};

// Row-stochastic transition matrix P = W^T of the reversed chain, each row
// completed with the derived self-loop p_jj = 1 - sum_{i != j} w(i,j).
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(int node_count, std::vector<int> offsets, std::vector<int> targets,
                   std::vector<double> probs);

  int node_count() const { return n_; }
  std::span<const int> row_targets(int j) const {
    return {targets_.data() + offset_[j], targets_.data() + offset_[j + 1]};
  }
  std::span<const double> row_probs(int j) const {
    return {probs_.data() + offset_[j], probs_.data() + offset_[j + 1]};
  }
  double row_sum(int j) const;
  double self_loop(int j) const;

 private:
  int n_ = 0;
  std::vector<int> offset_{0};
  std::vector<int> targets_;
  std::vector<double> probs_;
};

// Reports every violated invariant: weight range, NaN, in-sum feasibility.
// Empty report iff the graph is a valid LT instance.
std::vector<Violation> validate_graph(const InfluenceGraph& g);

// Throws ValidationError when the graph is invalid.
TransitionMatrix make_transition_matrix(const InfluenceGraph& g);

// Degree-normalized influence weights w(i,j) = a(i,j) / d_j for an undirected
// simple graph given as an edge list (either orientation, duplicates
// collapsed). Every column of the result sums to exactly 1; the entry from
// the largest-index neighbour absorbs the rounding residue so the sum is exact.
// Throws on self-loops, out-of-range ids, or isolated nodes.
InfluenceGraph normalize_adjacency(int node_count,
                                   std::span<const std::pair<int, int>> undirected_edges);

struct UISLTParams {
  std::vector<double> alphas;  // influence level, >= 0
  std::vector<double> betas;   // susceptance, > 0
};

// Feasibility: for all i, beta_i * sum_{j != i} alpha_j <= 1 (+ tolerance).
// Throws std::invalid_argument naming the first violating node.
void check_uislt_feasible(const UISLTParams& params);

// Complete graph with w(i,j) = alpha_i * beta_j for i != j.
InfluenceGraph build_uislt(const UISLTParams& params);

// --- Coauthorship ingestion -------------------------------------------------

struct CoauthRecord {
  std::string paper_id;
  std::vector<std::string> authors;
};

// Symmetric collaboration strengths accumulated over papers. Author ids are
// assigned in sorted-label order so the result is independent of record
// order; per-pair contributions are summed per denominator so the weights
// are bit-identical under record permutation as well.
struct CoauthWeights {
  std::vector<std::string> authors;                // index = node id
  std::map<std::pair<int, int>, double> raw;       // key (i, j) with i < j
  std::vector<std::string> warnings;
};

CoauthWeights accumulate_coauthorship(std::span<const CoauthRecord> records);

// Symmetric reading: raw weights in both directions, then per-source
// normalization w(i,j) = raw(i,j) / sum_k raw(i,k), then any column whose
// in-sum still exceeds 1 is rescaled by that in-sum.
InfluenceGraph coauthorship_graph(const CoauthWeights& weights);

// Directed reading: the whole strength of a pair goes to the higher-index
// author as the source, so edges point from higher to lower index and the
// digraph is acyclic. Same normalization afterwards.
InfluenceGraph directed_coauthorship_graph(const CoauthWeights& weights);

InfluenceGraph ingest_coauthorship(std::span<const CoauthRecord> records,
                                   std::vector<std::string>* warnings = nullptr);
InfluenceGraph direct_coauthorship(std::span<const CoauthRecord> records,
                                   std::vector<std::string>* warnings = nullptr);

}  // namespace ltinfluence
