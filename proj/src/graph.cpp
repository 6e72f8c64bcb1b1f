#include "injv/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "injv/error.hpp"

namespace injv {

Graph::Graph(int n) {
  if (n < 0) throw ValidationError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.add_edge(u, v)) {
      throw ValidationError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return g;
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return order() - 1;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(order()) + ")");
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = order();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph neighboring_graph(const Graph& g) {
  Graph sq(g.order());
  for (Vertex w = 0; w < g.order(); ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) sq.add_edge(nb[i], nb[j]);
    }
  }
  return sq;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closes a cycle through the root of
  // length at most dist[u] + dist[v] + 1, and the minimum over roots is exact.
  int best = -1;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> parent(g.order(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (best > 0 && 2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

int count_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (index[w] > static_cast<int>(i)) h.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return h;
}

Graph permuted(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ValidationError("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<Embedding> find_appearances(const Graph& host, const Graph& pattern,
                                        std::span<const int> max_degree) {
  if (static_cast<int>(max_degree.size()) != pattern.order()) {
    throw ValidationError("degree-cap map does not cover the pattern");
  }
  return find_embeddings(host, pattern,
                         [&](Vertex p, Vertex h) { return host.degree(h) <= max_degree[p]; });
}

}  // namespace injv
