#include "ltinfluence/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ltinfluence {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  std::istringstream is(line);
  while (is >> cur) fields.push_back(cur);
  return fields;
}

bool parse_int(const std::string& s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

struct RawLine {
  std::string src, dst;
  double weight;
  int lineno;
};

}  // namespace

InfluenceGraph read_graph_tsv(std::istream& in) {
  std::vector<RawLine> rows;
  int pinned_nodes = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto fields = split_fields(line.substr(1));
      if (fields.size() == 2 && fields[0] == "nodes") {
        int n;
        if (parse_int(fields[1], n)) pinned_nodes = std::max(pinned_nodes, n);
      }
      continue;
    }
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 3)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected `src dst weight`");
    double w;
    if (!parse_double(fields[2], w))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad weight `" +
                                  fields[2] + "`");
    rows.push_back({fields[0], fields[1], w, lineno});
  }

  bool integer_ids = std::all_of(rows.begin(), rows.end(), [](const RawLine& r) {
    int v;
    return parse_int(r.src, v) && parse_int(r.dst, v);
  });

  std::vector<WeightedEdge> edges;
  edges.reserve(rows.size());
  int n = pinned_nodes;
  std::vector<std::string> labels;
  if (integer_ids) {
    for (const auto& r : rows) {
      int a, b;
      parse_int(r.src, a);
      parse_int(r.dst, b);
      edges.push_back({a, b, r.weight});
      n = std::max({n, a + 1, b + 1});
    }
  } else {
    std::map<std::string, int> id;
    auto intern = [&](const std::string& name) {
      auto [it, fresh] = id.try_emplace(name, static_cast<int>(labels.size()));
      if (fresh) labels.push_back(name);
      return it->second;
    };
    for (const auto& r : rows) edges.push_back({intern(r.src), intern(r.dst), r.weight});
    n = std::max(n, static_cast<int>(labels.size()));
    labels.resize(n);
  }
  return InfluenceGraph(n, edges, std::move(labels));
}

InfluenceGraph read_graph_file(const std::string& path) {
  if (path == "-") return read_graph_tsv(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph_tsv(in);
}

void write_graph_tsv(std::ostream& out, const InfluenceGraph& g) {
  out << "# nodes\t" << g.node_count() << "\n";
  out.precision(17);
  for (const auto& e : g.edges()) {
    if (g.has_labels())
      out << g.label(e.src) << "\t" << g.label(e.dst) << "\t" << e.weight << "\n";
    else
      out << e.src << "\t" << e.dst << "\t" << e.weight << "\n";
  }
}

void write_graph_file(const std::string& path, const InfluenceGraph& g) {
  if (path == "-") {
    write_graph_tsv(std::cout, g);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_graph_tsv(out, g);
}

std::vector<CoauthRecord> read_coauthorship_tsv(std::istream& in) {
  std::vector<CoauthRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected `paper_id<TAB>authors`");
    CoauthRecord rec;
    rec.paper_id = line.substr(0, tab);
    std::string authors = line.substr(tab + 1);
    std::string name;
    std::istringstream as(authors);
    while (std::getline(as, name, ',')) {
      // trim surrounding whitespace
      auto b = name.find_first_not_of(" \t\r");
      auto e = name.find_last_not_of(" \t\r");
      if (b == std::string::npos) continue;
      rec.authors.push_back(name.substr(b, e - b + 1));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CoauthRecord> read_coauthorship_file(const std::string& path) {
  if (path == "-") return read_coauthorship_tsv(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coauthorship file: " + path);
  return read_coauthorship_tsv(in);
}

AdjacencyList read_adjacency_tsv(std::istream& in) {
  AdjacencyList out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2 && fields.size() != 3)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected `a b [1]`");
    int a, b;
    if (!parse_int(fields[0], a) || !parse_int(fields[1], b))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad node id");
    if (fields.size() == 3 && fields[2] != "1")
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": adjacency entries must be 1");
    out.edges.emplace_back(a, b);
    out.node_count = std::max({out.node_count, a + 1, b + 1});
  }
  return out;
}

AdjacencyList read_adjacency_file(const std::string& path) {
  if (path == "-") return read_adjacency_tsv(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open adjacency file: " + path);
  return read_adjacency_tsv(in);
}

}  // namespace ltinfluence
