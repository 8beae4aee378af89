#include <sstream>

#include "doctest.h"
#include "ltinfluence/graph.hpp"
#include "ltinfluence/graph_io.hpp"
#include "testutil.hpp"

using namespace ltinfluence;

TEST_CASE("validate_graph accepts a small valid graph") {
  std::vector<WeightedEdge> edges{{0, 1, 0.4}, {1, 0, 0.3}};
  InfluenceGraph g(2, edges);
  CHECK(validate_graph(g).empty());
}

TEST_CASE("validate_graph flags an overloaded in-sum") {
  std::vector<WeightedEdge> edges{{0, 1, 0.7}, {2, 1, 0.5}};
  InfluenceGraph g(3, edges);
  auto report = validate_graph(g);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == "in-sum");
  CHECK(report[0].node == 1);
  CHECK(report[0].value == doctest::Approx(1.2));
}

TEST_CASE("validate_graph flags a negative weight") {
  std::vector<WeightedEdge> edges{{0, 1, -0.1}};
  InfluenceGraph g(2, edges);
  auto report = validate_graph(g);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == "weight-range");
  CHECK(report[0].src == 0);
  CHECK(report[0].dst == 1);
}

TEST_CASE("graph construction rejects structural errors") {
  std::vector<WeightedEdge> self{{1, 1, 0.2}};
  CHECK_THROWS_AS(InfluenceGraph(2, self), std::invalid_argument);
  std::vector<WeightedEdge> dup{{0, 1, 0.2}, {0, 1, 0.3}};
  CHECK_THROWS_AS(InfluenceGraph(2, dup), std::invalid_argument);
  std::vector<WeightedEdge> range{{0, 3, 0.2}};
  CHECK_THROWS_AS(InfluenceGraph(2, range), std::invalid_argument);
}

TEST_CASE("make_transition_matrix completes rows with self-loops") {
  std::vector<WeightedEdge> edges{{0, 1, 0.4}};
  InfluenceGraph g(2, edges);
  TransitionMatrix P = make_transition_matrix(g);
  CHECK(P.self_loop(0) == doctest::Approx(1.0));
  CHECK(P.self_loop(1) == doctest::Approx(0.6));
  CHECK(P.row_sum(0) == doctest::Approx(1.0));
  CHECK(P.row_sum(1) == doctest::Approx(1.0));
  // row 1 of P carries w(0,1) back to node 0
  auto t = P.row_targets(1);
  auto p = P.row_probs(1);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == 0);
  CHECK(p[0] == doctest::Approx(0.4));
}

TEST_CASE("make_transition_matrix with saturated columns needs no self-loops") {
  // 0 -> 1 -> 0 with full weight: W^T is already doubly stochastic
  std::vector<WeightedEdge> edges{{0, 1, 1.0}, {1, 0, 1.0}};
  InfluenceGraph g(2, edges);
  TransitionMatrix P = make_transition_matrix(g);
  CHECK(P.self_loop(0) == 0.0);
  CHECK(P.self_loop(1) == 0.0);
  CHECK(P.row_sum(0) == doctest::Approx(1.0));
}

TEST_CASE("make_transition_matrix on a UISLT complete graph") {
  UISLTParams params{{0.2, 0.2, 0.2}, {1.0, 1.0, 1.0}};
  InfluenceGraph g = build_uislt(params);
  TransitionMatrix P = make_transition_matrix(g);
  for (int j = 0; j < 3; ++j) {
    CHECK(P.self_loop(j) == doctest::Approx(0.6));
    auto t = P.row_targets(j);
    auto p = P.row_probs(j);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] != j) CHECK(p[k] == doctest::Approx(0.2));
  }
}

TEST_CASE("make_transition_matrix rejects invalid graphs with the report") {
  std::vector<WeightedEdge> edges{{0, 1, 0.7}, {2, 1, 0.5}};
  InfluenceGraph g(3, edges);
  CHECK_THROWS_AS(make_transition_matrix(g), ValidationError);
  try {
    make_transition_matrix(g);
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() == 1);
  }
}

TEST_CASE("normalize_adjacency on star, edge and path") {
  SUBCASE("star: center 0 with leaves 1,2,3") {
    std::vector<std::pair<int, int>> adj{{0, 1}, {0, 2}, {0, 3}};
    InfluenceGraph g = normalize_adjacency(4, adj);
    CHECK(g.weight(1, 0) == doctest::Approx(1.0 / 3));
    CHECK(g.weight(0, 1) == doctest::Approx(1.0));
    CHECK(g.in_sum(0) == 1.0);  // exact by construction
  }
  SUBCASE("single edge") {
    std::vector<std::pair<int, int>> adj{{0, 1}};
    InfluenceGraph g = normalize_adjacency(2, adj);
    CHECK(g.weight(0, 1) == 1.0);
    CHECK(g.weight(1, 0) == 1.0);
  }
  SUBCASE("path 0-1-2") {
    std::vector<std::pair<int, int>> adj{{0, 1}, {1, 2}};
    InfluenceGraph g = normalize_adjacency(3, adj);
    CHECK(g.weight(0, 1) == doctest::Approx(0.5));
    CHECK(g.weight(2, 1) == doctest::Approx(0.5));
    CHECK(g.weight(1, 0) == doctest::Approx(1.0));
    CHECK(g.weight(1, 2) == doctest::Approx(1.0));
  }
  SUBCASE("isolated node is named in the error") {
    std::vector<std::pair<int, int>> adj{{0, 1}};
    CHECK_THROWS_WITH_AS(normalize_adjacency(3, adj),
                         doctest::Contains("node 2"), std::invalid_argument);
  }
}

TEST_CASE("normalize_adjacency columns sum to exactly 1 on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    rng::Stream rng(seed);
    int n = 3 + static_cast<int>(rng.next_below(10));
    // random connected-ish graph: a random tree plus extra edges
    auto edges = testutil::random_tree_edges(n, seed * 17 + 1);
    for (int extra = 0; extra < n / 2; ++extra) {
      int a = static_cast<int>(rng.next_below(n));
      int b = static_cast<int>(rng.next_below(n));
      if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    InfluenceGraph g = normalize_adjacency(n, edges);
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (double w : g.in_weights(j)) sum += w;
      CHECK(sum == 1.0);
    }
  }
}

TEST_CASE("build_uislt examples") {
  SUBCASE("uniform parameters") {
    UISLTParams p{{1.0, 1.0, 1.0}, {0.3, 0.3, 0.3}};
    InfluenceGraph g = build_uislt(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(g.weight(i, j) == doctest::Approx(0.3));
    CHECK(g.in_sum(0) == doctest::Approx(0.6));
    CHECK(validate_graph(g).empty());
  }
  SUBCASE("two nodes") {
    UISLTParams p{{0.5, 0.5}, {1.0, 1.0}};
    InfluenceGraph g = build_uislt(p);
    CHECK(g.weight(0, 1) == doctest::Approx(0.5));
    CHECK(g.weight(1, 0) == doctest::Approx(0.5));
  }
  SUBCASE("infeasible parameters name the node") {
    UISLTParams p{{1.0, 1.0}, {2.0, 2.0}};
    CHECK_THROWS_WITH_AS(build_uislt(p), doctest::Contains("node 0"), std::invalid_argument);
  }
}

TEST_CASE("random feasible UISLT instances validate cleanly") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    rng::Stream rng(seed);
    int n = 2 + static_cast<int>(rng.next_below(10));
    InfluenceGraph g = build_uislt(testutil::random_uislt(n, seed * 31));
    CHECK(validate_graph(g).empty());
  }
}

TEST_CASE("transition rows sum to 1 on random valid graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    rng::Stream rng(seed);
    int n = 2 + static_cast<int>(rng.next_below(12));
    InfluenceGraph g = testutil::random_graph(n, seed * 13 + 7);
    TransitionMatrix P = make_transition_matrix(g);
    for (int j = 0; j < n; ++j) CHECK(P.row_sum(j) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("coauthorship accumulation") {
  SUBCASE("one three-author paper gives 1/2 per pair") {
    std::vector<CoauthRecord> recs{{"p1", {"a", "b", "c"}}};
    CoauthWeights w = accumulate_coauthorship(recs);
    REQUIRE(w.authors.size() == 3);
    CHECK(w.raw.at({0, 1}) == doctest::Approx(0.5));
    CHECK(w.raw.at({0, 2}) == doctest::Approx(0.5));
    CHECK(w.raw.at({1, 2}) == doctest::Approx(0.5));
  }
  SUBCASE("two two-author papers accumulate") {
    std::vector<CoauthRecord> recs{{"p1", {"a", "b"}}, {"p2", {"a", "b"}}};
    CoauthWeights w = accumulate_coauthorship(recs);
    CHECK(w.raw.at({0, 1}) == doctest::Approx(2.0));
  }
  SUBCASE("single-author papers are skipped with a warning") {
    std::vector<CoauthRecord> recs{{"solo", {"a"}}, {"p", {"a", "b"}}};
    CoauthWeights w = accumulate_coauthorship(recs);
    REQUIRE(w.warnings.size() == 1);
    CHECK(w.warnings[0].find("solo") != std::string::npos);
    CHECK(w.authors.size() == 2);
  }
  SUBCASE("duplicate authors are deduplicated with a warning") {
    std::vector<CoauthRecord> recs{{"p", {"a", "b", "a"}}};
    CoauthWeights w = accumulate_coauthorship(recs);
    REQUIRE(w.warnings.size() == 1);
    CHECK(w.raw.at({0, 1}) == doctest::Approx(1.0));  // n_r = 2 after dedup
  }
}

TEST_CASE("coauthorship normalization: hand-computed 3-author example") {
  // One paper {a,b,c}: raw = 1/2 per pair; each node's out-total is 1, so
  // normalized w(a,b) = w(a,c) = 1/2. Column in-sums are then exactly 1 and
  // no rescale is needed.
  std::vector<CoauthRecord> recs{{"p1", {"a", "b", "c"}}};
  InfluenceGraph g = ingest_coauthorship(recs);
  CHECK(g.weight(0, 1) == doctest::Approx(0.5));
  CHECK(g.weight(0, 2) == doctest::Approx(0.5));
  CHECK(g.in_sum(1) <= 1.0 + kTolerance);
  CHECK(validate_graph(g).empty());
  CHECK(g.label(0) == "a");
}

TEST_CASE("ingest_coauthorship is order-independent") {
  std::vector<CoauthRecord> recs{
      {"p1", {"carol", "alice"}},
      {"p2", {"bob", "alice", "dave"}},
      {"p3", {"dave", "carol", "bob", "alice"}},
      {"p4", {"bob", "carol"}},
  };
  InfluenceGraph g1 = ingest_coauthorship(recs);
  std::reverse(recs.begin(), recs.end());
  std::swap(recs[1], recs[2]);
  InfluenceGraph g2 = ingest_coauthorship(recs);
  REQUIRE(g1.node_count() == g2.node_count());
  REQUIRE(g1.labels() == g2.labels());
  auto e1 = g1.edges(), e2 = g2.edges();
  REQUIRE(e1.size() == e2.size());
  for (std::size_t k = 0; k < e1.size(); ++k) {
    CHECK(e1[k].src == e2[k].src);
    CHECK(e1[k].dst == e2[k].dst);
    CHECK(e1[k].weight == e2[k].weight);  // bit-identical
  }
}

TEST_CASE("directed coauthorship points to lower indices and is acyclic") {
  SUBCASE("raw strength goes wholly to the higher index") {
    std::vector<CoauthRecord> recs{{"p1", {"a", "b"}}, {"p2", {"a", "b"}}};
    CoauthWeights w = accumulate_coauthorship(recs);
    CHECK(w.raw.at({0, 1}) == doctest::Approx(2.0));
    InfluenceGraph g = directed_coauthorship_graph(w);
    CHECK(g.weight(1, 0) == doctest::Approx(1.0));  // normalized
    CHECK(g.weight(0, 1) == 0.0);
  }
  SUBCASE("all edges point from higher to lower index") {
    std::vector<CoauthRecord> recs{{"p1", {"a", "b", "c"}}, {"p2", {"b", "c"}}};
    InfluenceGraph g = direct_coauthorship(recs);
    for (const auto& e : g.edges()) CHECK(e.src > e.dst);
  }
  SUBCASE("no directed cycles on random instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      rng::Stream rng(seed);
      std::vector<CoauthRecord> recs;
      const char* names[] = {"a", "b", "c", "d", "e", "f", "g"};
      for (int p = 0; p < 8; ++p) {
        CoauthRecord rec{"p" + std::to_string(p), {}};
        int sz = 2 + static_cast<int>(rng.next_below(4));
        for (int q = 0; q < sz; ++q) rec.authors.push_back(names[rng.next_below(7)]);
        recs.push_back(rec);
      }
      std::vector<CoauthRecord> usable;
      for (auto& r : recs) usable.push_back(r);
      InfluenceGraph g = direct_coauthorship(usable);
      // higher->lower edges admit the identity order as a topological sort
      for (const auto& e : g.edges()) CHECK(e.src > e.dst);
      CHECK(validate_graph(g).empty());
    }
  }
}

TEST_CASE("graph TSV round trip with integer ids") {
  std::vector<WeightedEdge> edges{{0, 1, 0.25}, {2, 0, 0.125}};
  InfluenceGraph g(4, edges);  // node 3 isolated
  std::stringstream ss;
  write_graph_tsv(ss, g);
  InfluenceGraph back = read_graph_tsv(ss);
  CHECK(back.node_count() == 4);
  CHECK(back.weight(0, 1) == 0.25);
  CHECK(back.weight(2, 0) == 0.125);
}

TEST_CASE("graph TSV with labels maps ids in first-seen order") {
  std::stringstream ss("alice\tbob\t0.5\nbob\tcarol\t0.25\n");
  InfluenceGraph g = read_graph_tsv(ss);
  REQUIRE(g.node_count() == 3);
  CHECK(g.label(0) == "alice");
  CHECK(g.label(1) == "bob");
  CHECK(g.label(2) == "carol");
  CHECK(g.weight(0, 1) == 0.5);
  CHECK(g.weight(1, 2) == 0.25);
}

TEST_CASE("graph TSV comments and bad lines") {
  std::stringstream ok("# a comment\n0\t1\t0.5\n\n");
  CHECK(read_graph_tsv(ok).weight(0, 1) == 0.5);
  std::stringstream bad("0\t1\tnot-a-number\n");
  CHECK_THROWS_AS(read_graph_tsv(bad), std::invalid_argument);
  std::stringstream missing("0\t1\n");
  CHECK_THROWS_AS(read_graph_tsv(missing), std::invalid_argument);
}
