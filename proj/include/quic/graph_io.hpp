#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "quic/graph.hpp"

namespace quic {

/// {"n": int, "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph &g);
Graph graph_from_json(const nlohmann::json &j);

/// "n m\nu v\n..." with one edge per line.
std::string graph_to_edge_list(const Graph &g);
Graph graph_from_edge_list(std::istream &in);

/// Reads either format; JSON is detected by a leading '{'.
Graph read_graph_file(const std::string &path);
void write_graph_file(const Graph &g, const std::string &path);

}  // namespace quic
