#include "ltinfluence/closed_forms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ltinfluence {

namespace {

// Elementary symmetric polynomials e_0..e_max of xs.
std::vector<double> elementary_symmetric(std::span<const double> xs, int max_degree) {
  std::vector<double> e(max_degree + 1, 0.0);
  e[0] = 1.0;
  int filled = 0;
  for (double x : xs) {
    ++filled;
    for (int d = std::min(filled, max_degree); d >= 1; --d) e[d] += x * e[d - 1];
  }
  return e;
}

std::vector<int> checked_seeds(int n, std::span<const int> seeds) {
  if (seeds.empty()) throw std::invalid_argument("seed set must be nonempty");
  std::vector<int> sorted(seeds.begin(), seeds.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || sorted[k] >= n) throw std::invalid_argument("seed node out of range");
    if (k > 0 && sorted[k] == sorted[k - 1])
      throw std::invalid_argument("duplicate seed node");
  }
  return sorted;
}

}  // namespace

double f_m(std::span<const double> xs, int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (m > static_cast<int>(xs.size())) return 0.0;
  auto e = elementary_symmetric(xs, m);
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  return factorial * e[m];
}

UISLTEvaluation sigma_uislt(const UISLTParams& params, std::span<const int> seeds) {
  check_uislt_feasible(params);
  int n = static_cast<int>(params.alphas.size());
  auto seed_list = checked_seeds(n, seeds);

  UISLTEvaluation out;
  for (int s : seed_list) out.alpha_seed_total += params.alphas[s];

  int k = n - static_cast<int>(seed_list.size());
  if (k == 0) {
    out.sigma = static_cast<double>(n);  // A0 = N: no free nodes, no spread terms
    return out;
  }

  std::vector<double> beta, gamma;  // over non-seed nodes, ascending id
  beta.reserve(k);
  gamma.reserve(k);
  std::set<int> seed_set(seed_list.begin(), seed_list.end());
  for (int j = 0; j < n; ++j) {
    if (seed_set.count(j)) continue;
    beta.push_back(params.betas[j]);
    gamma.push_back(params.alphas[j] * params.betas[j]);
  }

  // h^(m) = m! * sum_s beta_s * e_m(gamma without gamma_s): each (m+1)-subset
  // S with weight (prod_S beta) f^m(alpha_S) splits over the element of S
  // left out of the alpha product. All-positive sums, no cancellation.
  out.terms.assign(k, 0.0);
  std::vector<double> loo;
  loo.reserve(k - 1);
  for (int s = 0; s < k; ++s) {
    loo.clear();
    for (int t = 0; t < k; ++t)
      if (t != s) loo.push_back(gamma[t]);
    auto e = elementary_symmetric(loo, k - 1);
    for (int m = 0; m < k; ++m) out.terms[m] += beta[s] * e[m];
  }
  double factorial = 1.0;
  for (int m = 0; m < k; ++m) {
    if (m >= 2) factorial *= m;
    out.terms[m] *= factorial;
  }

  double spread = 0.0;
  for (double h : out.terms) spread += h;
  out.sigma = static_cast<double>(seed_list.size()) + out.alpha_seed_total * spread;
  return out;
}

double sigma_uslt(std::span<const double> betas, std::span<const int> seeds) {
  int n = static_cast<int>(betas.size());
  auto seed_list = checked_seeds(n, seeds);
  for (int i = 0; i < n; ++i) {
    if (!(betas[i] >= 0.0))
      throw std::invalid_argument("beta[" + std::to_string(i) + "] must be >= 0");
    if (betas[i] * (n - 1) > 1.0 + kTolerance)
      throw std::invalid_argument("infeasible USLT: beta[" + std::to_string(i) +
                                  "] exceeds 1/(n-1)");
  }

  int k = n - static_cast<int>(seed_list.size());
  std::vector<double> beta;
  std::set<int> seed_set(seed_list.begin(), seed_list.end());
  for (int j = 0; j < n; ++j)
    if (!seed_set.count(j)) beta.push_back(betas[j]);

  auto e = elementary_symmetric(beta, k);
  double spread = 0.0;
  double factorial = 1.0;  // (m+1)! rolling
  for (int m = 0; m < k; ++m) {
    factorial *= (m + 1);
    spread += factorial * e[m + 1];
  }
  double K = static_cast<double>(seed_list.size());
  return K + K * spread;
}

double sigma_uilt(std::span<const double> alphas, std::span<const int> seeds) {
  int n = static_cast<int>(alphas.size());
  auto seed_list = checked_seeds(n, seeds);
  double alpha_total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(alphas[i] >= 0.0))
      throw std::invalid_argument("alpha[" + std::to_string(i) + "] must be >= 0");
    alpha_total += alphas[i];
  }
  for (int i = 0; i < n; ++i) {
    if (alpha_total - alphas[i] > 1.0 + kTolerance)
      throw std::invalid_argument("infeasible UILT: alphas excluding node " +
                                  std::to_string(i) + " sum beyond 1");
  }

  int k = n - static_cast<int>(seed_list.size());
  double alpha_seed = 0.0;
  std::set<int> seed_set(seed_list.begin(), seed_list.end());
  std::vector<double> alpha;
  for (int j = 0; j < n; ++j) {
    if (seed_set.count(j))
      alpha_seed += alphas[j];
    else
      alpha.push_back(alphas[j]);
  }

  auto e = elementary_symmetric(alpha, std::max(0, k - 1));
  double spread = 0.0;
  double factorial = 1.0;
  for (int m = 0; m < k; ++m) {
    if (m >= 2) factorial *= m;
    spread += static_cast<double>(k - m) * factorial * e[m];
  }
  return static_cast<double>(seed_list.size()) + alpha_seed * spread;
}

double sigma_degree_acyclic(const InfluenceGraph& g, int node) {
  int n = g.node_count();
  if (node < 0 || node >= n) throw std::invalid_argument("node out of range");

  // Underlying undirected structure; union-find cycle detection.
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    auto targets = g.out_targets(i);
    auto weights = g.out_weights(i);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      int j = targets[k];
      if (weights[k] <= 0.0) continue;
      if (j < i && g.weight(j, i) > 0.0) continue;  // counted from the other side
      ++degree[i];
      ++degree[j];
      int a = find(i), b = find(j);
      if (a == b)
        throw std::invalid_argument("cycle detected: the degree model closed form "
                                    "requires an acyclic undirected graph");
      parent[a] = b;
    }
  }
  return static_cast<double>(degree[node]) + 1.0;
}

PairwiseIdentities pairwise_influence_identities(const InfluenceGraph& g, int i, int j,
                                                 const ExactOptions& opts) {
  if (i == j) throw std::invalid_argument("nodes must be distinct");
  PairwiseIdentities out;
  const std::array<int, 2> pair{std::min(i, j), std::max(i, j)};
  out.sigma_pair = sigma_set_exact(g, pair, 0, opts);
  out.sigma_i = sigma_node_exact(g, i, 0, opts);
  out.sigma_j = sigma_node_exact(g, j, 0, opts);

  double sigma_j_without_i = sigma_node_exact(g, j, 1ULL << i, opts);
  double sigma_i_without_j = sigma_node_exact(g, i, 1ULL << j, opts);
  out.residuals[0] = out.sigma_pair - (sigma_j_without_i + sigma_i_without_j);
  out.residuals[1] = out.sigma_i - (sigma_i_without_j + g.weight(i, j) * sigma_j_without_i);
  out.residuals[2] = out.sigma_j - (sigma_j_without_i + g.weight(j, i) * sigma_i_without_j);
  return out;
}

}  // namespace ltinfluence
