#pragma once

// Backtracking subgraph-monomorphism search behind find_appearances.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace injv {

namespace detail {

/// Pattern vertices in an order where, inside each component, every vertex
/// after the first has an earlier neighbor.
inline std::vector<Vertex> search_order(const Graph& pattern) {
  const int n = pattern.order();
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!placed[v] && (root < 0 || pattern.degree(v) > pattern.degree(root))) root = v;
    }
    placed[root] = 1;
    order.push_back(root);
    // Grow by the unplaced vertex with the most placed neighbors.
    for (;;) {
      Vertex best = -1;
      int best_links = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (Vertex w : pattern.neighbors(v)) links += placed[w];
        if (links > best_links) {
          best = v;
          best_links = links;
        }
      }
      if (best < 0) break;
      placed[best] = 1;
      order.push_back(best);
    }
  }
  return order;
}

}  // namespace detail

template <typename Admissible>
std::vector<Embedding> find_embeddings(const Graph& host, const Graph& pattern,
                                       Admissible&& admissible, bool first_only) {
  const int n = pattern.order();
  std::vector<Embedding> found;
  if (n == 0) {
    found.emplace_back();
    return found;
  }
  if (n > host.order()) return found;

  const std::vector<Vertex> order = detail::search_order(pattern);
  // For each position, the pattern neighbors already mapped at that point.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<Vertex>> back_links(n);
  for (int i = 0; i < n; ++i) {
    for (Vertex w : pattern.neighbors(order[i])) {
      if (position[w] < i) back_links[i].push_back(w);
    }
  }

  const auto pattern_edges = pattern.edges();
  std::set<std::pair<std::vector<Vertex>, std::vector<Edge>>> seen;
  Embedding image(n, -1);
  std::vector<char> used(host.order(), 0);
  bool stop = false;

  auto record = [&] {
    std::vector<Vertex> verts(image);
    std::sort(verts.begin(), verts.end());
    std::vector<Edge> img;
    img.reserve(pattern_edges.size());
    for (auto [a, b] : pattern_edges) {
      Vertex x = image[a], y = image[b];
      img.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(img.begin(), img.end());
    if (seen.emplace(std::move(verts), std::move(img)).second) {
      found.push_back(image);
      if (first_only) stop = true;
    }
  };

  auto try_vertex = [&](int i, Vertex p, Vertex h) {
    if (used[h] || host.degree(h) < pattern.degree(p)) return false;
    for (Vertex q : back_links[i]) {
      if (!host.adjacent(image[q], h)) return false;
    }
    return static_cast<bool>(admissible(p, h));
  };

  auto extend = [&](auto& self, int i) -> void {
    if (stop) return;
    if (i == n) {
      record();
      return;
    }
    const Vertex p = order[i];
    auto visit = [&](Vertex h) {
      if (!try_vertex(i, p, h)) return;
      image[p] = h;
      used[h] = 1;
      self(self, i + 1);
      used[h] = 0;
      image[p] = -1;
    };
    if (!back_links[i].empty()) {
      // Candidates are restricted to neighbors of an already-mapped vertex.
      for (Vertex h : host.neighbors(image[back_links[i].front()])) {
        visit(h);
        if (stop) return;
      }
    } else {
      for (Vertex h = 0; h < host.order(); ++h) {
        visit(h);
        if (stop) return;
      }
    }
  };
  extend(extend, 0);
  return found;
}

}  // namespace injv
