#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace injv {

using Vertex = int;

/// Unordered edge stored with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

/// Total map from the vertices of a companion graph to a value (degree caps,
/// list sizes, colors). Indexed by vertex id.
template <typename T>
using VertexMap = std::vector<T>;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are kept sorted so that neighbor iteration and edge lists
/// are deterministic; `add_edge` rejects loops and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicate edges are rejected.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return num_edges_; }

  /// Appends an isolated vertex and returns its id.
  Vertex add_vertex();

  /// Inserts {u,v}. Returns false if the edge already exists.
  bool add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;
  int min_degree() const;

  /// All edges with first < second, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  int num_edges_ = 0;
};

/// Graph on the same vertices where u~v iff u != v and u, v have a common
/// neighbor in `g`. Injective colorings of `g` are proper colorings of this graph.
Graph neighboring_graph(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
int count_components(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Relabels vertices: vertex v of `g` becomes perm[v].
Graph permuted(const Graph& g, std::span<const Vertex> perm);

/// An appearance of a pattern: image[p] is the host vertex that pattern vertex p maps to.
using Embedding = std::vector<Vertex>;

/// Every injective edge-preserving map from `pattern` into `host` such that
/// deg_host(image[p]) <= max_degree[p]. Maps with the same image vertex set and
/// image edge set (automorphic relabelings) are reported once.
std::vector<Embedding> find_appearances(const Graph& host, const Graph& pattern,
                                        std::span<const int> max_degree);

/// Same search with an arbitrary per-pair admissibility test; used for
/// configuration containment where the host carries its own degree caps.
template <typename Admissible>
std::vector<Embedding> find_embeddings(const Graph& host, const Graph& pattern,
                                       Admissible&& admissible, bool first_only = false);

}  // namespace injv

#include "injv/detail/embedding_search.hpp"
