#pragma once

#include <vector>

#include "locgame/common.hpp"
#include "locgame/design.hpp"

namespace locgame {

enum class Side : uint8_t { point, block, plain };

/// Undirected graph with an eagerly computed all-pairs distance matrix.
/// Incidence graphs carry POINT/BLOCK side tags; plain graphs tag every
/// vertex PLAIN. Immutable after construction and safe to share across
/// threads.
class Graph {
 public:
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Incidence (Levi) graph of a design: vertices 0..v-1 are points,
  /// v..v+b-1 are blocks. Throws DisconnectedGraph when any distance is
  /// infinite.
  static Graph incidence(const Design& d);

  int n() const { return n_; }
  int num_points() const { return num_points_; }
  int num_blocks() const { return n_ - num_points_; }
  Side side(Vertex v) const { return side_[v]; }
  bool is_point(Vertex v) const { return side_[v] == Side::point; }
  bool is_block(Vertex v) const { return side_[v] == Side::block; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return set_contains(adj_[u], v); }

  /// Hop distance; -1 for disconnected pairs.
  int dist(Vertex u, Vertex v) const { return dist_[u][v]; }
  bool connected() const { return connected_; }

  VertexSet all_vertices() const;
  VertexSet point_vertices() const;
  VertexSet block_vertices() const;

  /// Length of a shortest cycle; -1 for forests. Exhaustive edge-deletion
  /// search, fine for the graph sizes used here.
  int girth() const;

 private:
  Graph() = default;
  void finalize();

  int n_ = 0;
  int num_points_ = 0;
  bool connected_ = false;
  std::vector<VertexSet> adj_;
  std::vector<Side> side_;
  std::vector<std::vector<int>> dist_;
};

/// Spec operation: incidence graph of a validated design (distances filled,
/// connectivity enforced).
inline Graph incidence_graph(const Design& d) { return Graph::incidence(d); }

}  // namespace locgame
