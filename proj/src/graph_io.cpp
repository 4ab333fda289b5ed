#include "quic/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "quic/error.hpp"

namespace quic {

nlohmann::json graph_to_json(const Graph &g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge &e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json &j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edge must be [u, v]");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::OutOfRange, "edge endpoint outside 0..n-1");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("graph json: ") + e.what());
  }
}

std::string graph_to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_edge_list(std::istream &in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::Parse, "edge list header 'n m'");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw Error(ErrorCode::Parse, "edge list truncated");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::OutOfRange, "edge endpoint");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  in >> std::ws;
  if (in.peek() == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::Parse, path + ": " + e.what());
    }
    return graph_from_json(j);
  }
  return graph_from_edge_list(in);
}

void write_graph_file(const Graph &g, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    out << graph_to_json(g).dump() << '\n';
  } else {
    out << graph_to_edge_list(g);
  }
}

}  // namespace quic
