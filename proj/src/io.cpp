#include "dst/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dst {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& msg) {
  throw std::invalid_argument("edge list: " + msg);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m)) parse_error("missing header line \"n m\"");
  if (n < 0 || m < 0) parse_error("negative counts in header");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) parse_error("expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      parse_error("edge endpoint out of range: " + std::to_string(u) + " " +
                  std::to_string(v));
    if (u >= v)
      parse_error("edges must be written as \"u v\" with u < v: " +
                  std::to_string(u) + " " + std::to_string(v));
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
      parse_error("duplicate edge " + std::to_string(u) + " " +
                  std::to_string(v));
  }
  long long extra;
  if (in >> extra) parse_error("trailing data after the last edge");
  return g;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  return read_edge_list(read_text_file(path));
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for write: " + path);
  out << write_edge_list(g);
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = fnv1a(write_edge_list(g));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

const char* kPalette[6] = {"solid", "dashed", "dotted", "bold",
                           "dashed,bold", "dotted,bold"};

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges())
    out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const TreeFamily& f) {
  std::ostringstream out;
  out << "graph family {\n";
  for (int v = 0; v < f.host().vertex_count(); ++v) out << "  " << v << ";\n";
  for (int t = 0; t < f.size(); ++t) {
    const char* style = kPalette[t % 6];
    for (const Edge& e : f.tree(t).edges())
      out << "  " << e.first << " -- " << e.second << " [style=\"" << style
          << "\" label=\"T" << t + 1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string family_to_json(const TreeFamily& f) {
  json j;
  j["host"] = graph_hash(f.host());
  j["k"] = f.size();
  json trees = json::array();
  for (int t = 0; t < f.size(); ++t) {
    json edges = json::array();
    for (const Edge& e : f.tree(t).edges())
      edges.push_back(json::array({e.first, e.second}));
    trees.push_back(edges);
  }
  j["trees"] = trees;
  j["i"] = f.overlap_inner().size();
  j["j"] = f.overlap_edges().size();
  return j.dump(2) + "\n";
}

TreeFamily family_from_json(std::shared_ptr<const Graph> host,
                            const std::string& text) {
  json j = json::parse(text);
  std::string expect = j.at("host").get<std::string>();
  if (expect != graph_hash(*host))
    throw CertificateError("certificate host hash " + expect +
                           " does not match graph " + graph_hash(*host));
  std::vector<std::vector<Edge>> trees;
  for (const auto& tj : j.at("trees")) {
    std::vector<Edge> edges;
    for (const auto& ej : tj)
      edges.push_back(edge_key(ej.at(0).get<int>(), ej.at(1).get<int>()));
    trees.push_back(std::move(edges));
  }
  return TreeFamily(std::move(host), std::move(trees));
}

std::string partition_to_json(const VertexPartition& p, int l) {
  json j;
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  j["blocks"] = blocks;
  j["rooted"] = p.rooted;
  j["l"] = l;
  return j.dump(2) + "\n";
}

PartitionCert partition_from_json(const std::string& text) {
  json j = json::parse(text);
  PartitionCert cert;
  for (const auto& bj : j.at("blocks"))
    cert.partition.blocks.push_back(bj.get<std::vector<int>>());
  cert.partition.rooted = j.at("rooted").get<bool>();
  cert.l = j.at("l").get<int>();
  return cert;
}

}  // namespace dst
