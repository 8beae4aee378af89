#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ltinfluence/graph.hpp"

namespace ltinfluence {

// Graph TSV: one edge per line, `src<TAB>dst<TAB>weight`. Node ids are
// non-negative integers, or arbitrary labels mapped to ids in first-seen
// order when any id fails to parse as an integer. Lines starting with `#`
// are comments, except the directive `# nodes <N>` which pins the node
// count (keeps isolated trailing nodes across round trips).
InfluenceGraph read_graph_tsv(std::istream& in);
InfluenceGraph read_graph_file(const std::string& path);  // "-" reads stdin
void write_graph_tsv(std::ostream& out, const InfluenceGraph& g);
void write_graph_file(const std::string& path, const InfluenceGraph& g);  // "-" writes stdout

// Coauthorship TSV: `paper_id<TAB>author1,author2,...`.
std::vector<CoauthRecord> read_coauthorship_tsv(std::istream& in);
std::vector<CoauthRecord> read_coauthorship_file(const std::string& path);

// Undirected adjacency TSV: `a<TAB>b` per edge (an optional third column
// must be 1). Returns the edge list and the node count.
struct AdjacencyList {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};
AdjacencyList read_adjacency_tsv(std::istream& in);
AdjacencyList read_adjacency_file(const std::string& path);

}  // namespace ltinfluence
