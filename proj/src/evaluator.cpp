#include "ltinfluence/evaluator.hpp"

#include <algorithm>
#include <sstream>

#include "ltinfluence/rng.hpp"

namespace ltinfluence {

namespace {

std::vector<int> join_sorted(std::span<const int> base, int extra) {
  std::vector<int> out(base.begin(), base.end());
  out.push_back(extra);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<double> InfluenceEvaluator::sigma_with_each(std::span<const int> base,
                                                        std::span<const int> candidates,
                                                        std::span<const int> excluded) {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (int v : candidates) out.push_back(sigma(join_sorted(base, v), excluded));
  return out;
}

ExactEvaluator::ExactEvaluator(const InfluenceGraph& g, ExactOptions exact, PathOptions paths)
    : g_(g), exact_(exact), paths_(paths), transition_(make_transition_matrix(g)) {}

double ExactEvaluator::sigma(std::span<const int> seeds, std::span<const int> excluded) {
  ++calls_;
  return sigma_set_exact(g_, seeds, mask_of(excluded), exact_);
}

std::vector<double> ExactEvaluator::activation_probs(std::span<const int> seeds) {
  ++calls_;  // one sweep
  NodeMask seed_mask = mask_of(seeds);
  std::vector<double> g(g_.node_count(), 0.0);
  for (int j = 0; j < g_.node_count(); ++j) {
    PathProbQuery q{j, seed_mask, -1, kAllNodes};
    g[j] = acyclic_hit_prob(transition_, q, paths_);
  }
  return g;
}

std::string ExactEvaluator::describe() const {
  std::ostringstream os;
  os << "exact(recursion_cap=" << exact_.recursion_cap << ")";
  return os.str();
}

MonteCarloEvaluator::MonteCarloEvaluator(const InfluenceGraph& g, std::int64_t runs,
                                         std::uint64_t rng_seed)
    : g_(g), runs_(runs), base_seed_(rng_seed), sim_(g) {
  if (runs_ < 1) throw std::invalid_argument("runs must be >= 1");
}

std::uint64_t MonteCarloEvaluator::effective_seed() const {
  return stream_ == 0 ? base_seed_ : rng::mix(base_seed_, stream_);
}

void MonteCarloEvaluator::set_stream(std::uint64_t stream) { stream_ = stream; }

double MonteCarloEvaluator::sigma(std::span<const int> seeds, std::span<const int> excluded) {
  ++calls_;
  sim_.set_excluded(excluded);
  return sim_.batch(seeds, runs_, effective_seed()).mean();
}

std::vector<double> MonteCarloEvaluator::activation_probs(std::span<const int> seeds) {
  ++calls_;  // one sweep: a single batch estimates g_j for every node
  sim_.set_excluded({});
  return sim_.batch(seeds, runs_, effective_seed(), true).probs();
}

std::vector<double> MonteCarloEvaluator::sigma_with_each(std::span<const int> base,
                                                         std::span<const int> candidates,
                                                         std::span<const int> excluded) {
  calls_ += static_cast<std::int64_t>(candidates.size());
  sim_.set_excluded(excluded);
  sim_.snapshot(base, runs_, effective_seed());
  std::vector<double> out;
  out.reserve(candidates.size());
  for (int v : candidates) out.push_back(sim_.extend_mean(v));
  return out;
}

std::string MonteCarloEvaluator::describe() const {
  std::ostringstream os;
  os << "mc(runs=" << runs_ << ", rng=" << base_seed_ << ", algorithm=" << rng::kAlgorithm
     << ")";
  return os.str();
}

}  // namespace ltinfluence
