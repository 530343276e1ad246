#include "locgame/graph.hpp"

#include <deque>
#include <numeric>

namespace locgame {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n_ = n;
  g.num_points_ = 0;
  g.adj_.assign(n, {});
  g.side_.assign(n, Side::plain);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw Error(Errc::bad_format, "bad edge");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) sort_unique(a);
  g.finalize();
  return g;
}

Graph Graph::incidence(const Design& d) {
  check_design_shape(d);
  Graph g;
  g.n_ = d.v + d.b();
  g.num_points_ = d.v;
  g.adj_.assign(g.n_, {});
  g.side_.assign(g.n_, Side::plain);
  for (int p = 0; p < d.v; ++p) g.side_[p] = Side::point;
  for (int bi = 0; bi < d.b(); ++bi) {
    int bv = d.v + bi;
    g.side_[bv] = Side::block;
    for (int p : d.blocks[bi]) {
      g.adj_[p].push_back(bv);
      g.adj_[bv].push_back(p);
    }
  }
  for (auto& a : g.adj_) sort_unique(a);
  g.finalize();
  if (!g.connected_)
    throw Error(Errc::disconnected_graph, "incidence graph is disconnected");
  return g;
}

void Graph::finalize() {
  dist_.assign(n_, std::vector<int>(n_, -1));
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    auto& row = dist_[s];
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj_[u]) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  connected_ = true;
  for (int v = 0; v < n_ && connected_; ++v)
    if (dist_[0][v] < 0) connected_ = false;
  if (n_ == 0) connected_ = false;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(n_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

VertexSet Graph::point_vertices() const {
  VertexSet s;
  for (int v = 0; v < n_; ++v)
    if (side_[v] == Side::point) s.push_back(v);
  return s;
}

VertexSet Graph::block_vertices() const {
  VertexSet s;
  for (int v = 0; v < n_; ++v)
    if (side_[v] == Side::block) s.push_back(v);
  return s;
}

int Graph::girth() const {
  // Shortest cycle through each edge: remove the edge, find the residual
  // shortest path between its ends.
  int best = -1;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v < u) continue;
      std::vector<int> d(n_, -1);
      std::deque<int> queue;
      d[u] = 0;
      queue.push_back(u);
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj_[x]) {
          if (x == u && y == v) continue;
          if (x == v && y == u) continue;
          if (d[y] < 0) {
            d[y] = d[x] + 1;
            queue.push_back(y);
          }
        }
      }
      if (d[v] >= 0) {
        int cyc = d[v] + 1;
        if (best < 0 || cyc < best) best = cyc;
      }
    }
  }
  return best;
}

}  // namespace locgame
