#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "injv/catalog.hpp"
#include "injv/error.hpp"

namespace injv {

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finalizer over the running hash
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Color refinement started from (md, precolored, degree). Colors are hash
// values, so they are comparable between configurations.
std::vector<std::uint64_t> refined_colors(const Configuration& c) {
  const int n = c.order();
  std::vector<std::uint64_t> color(n);
  for (Vertex v = 0; v < n; ++v) {
    color[v] = mix(mix(mix(0, static_cast<std::uint64_t>(c.md[v])), c.precolored.empty() ? 0 : c.precolored[v]),
                   static_cast<std::uint64_t>(c.graph.degree(v)));
  }
  std::vector<std::uint64_t> next(n), around;
  for (int round = 0; round < n; ++round) {
    for (Vertex v = 0; v < n; ++v) {
      around.clear();
      for (Vertex w : c.graph.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = mix(color[v], 0x51);
      for (auto x : around) h = mix(h, x);
      next[v] = h;
    }
    auto classes = [](std::vector<std::uint64_t> x) {
      std::sort(x.begin(), x.end());
      return std::unique(x.begin(), x.end()) - x.begin();
    };
    const bool stable = classes(next) == classes(color);
    color.swap(next);
    if (stable) break;
  }
  return color;
}

}  // namespace

std::uint64_t invariant_hash(const Configuration& c) {
  std::vector<std::uint64_t> colors = refined_colors(c);
  std::sort(colors.begin(), colors.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(c.order()), static_cast<std::uint64_t>(c.graph.size()));
  for (auto x : colors) h = mix(h, x);
  return h;
}

bool isomorphic(const Configuration& a, const Configuration& b) {
  const int n = a.order();
  if (n != b.order() || a.graph.size() != b.graph.size()) return false;
  const auto ca = refined_colors(a), cb = refined_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Map a's vertices in an order where each has an earlier neighbor when possible.
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (Vertex w : a.graph.neighbors(order[i])) {
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    for (Vertex h = 0; h < n; ++h) {
      if (used[h] || cb[h] != ca[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const Vertex u = order[j];
        ok = a.graph.adjacent(u, v) == b.graph.adjacent(image[u], h);
      }
      if (!ok) continue;
      image[v] = h;
      used[h] = 1;
      if (extend(i + 1)) return true;
      used[h] = 0;
      image[v] = -1;
    }
    return false;
  };
  return extend(0);
}

bool contains(const Configuration& host, const Configuration& pattern) {
  auto found = find_embeddings(
      host.graph, pattern.graph, [&](Vertex p, Vertex h) { return host.md[h] <= pattern.md[p]; }, true);
  return !found.empty();
}

// ---------------------------------------------------------------------------
// Closure operations

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::basic: return "basic";
    case Stage::identified: return "identified";
    case Stage::added: return "added";
  }
  return "?";
}

namespace {

Configuration derived_copy(std::string name, Graph graph, VertexMap<int> md, VertexMap<char> precolored,
                           std::vector<std::string> names, const Configuration& parent) {
  Configuration c = make_configuration(std::move(name), std::move(graph), std::move(md), std::move(precolored));
  c.vertex_names = std::move(names);
  c.group = "closure";
  c.label = parent.label == Label::greedy ? Label::greedy : Label::alon_tarsi;
  return c;
}

std::vector<std::string> names_of(const Configuration& c) {
  std::vector<std::string> names(c.order());
  for (Vertex v = 0; v < c.order(); ++v) names[v] = c.vertex_name(v);
  return names;
}

bool girth_ok(const Graph& g) {
  auto girth_value = girth(g);
  return !girth_value || *girth_value >= 6;
}

}  // namespace

std::optional<Configuration> identify_leaves(const Configuration& c, Vertex u, Vertex v) {
  const int n = c.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw ValidationError(c.name + ": vertex out of range");
  if (u == v) throw ValidationError(c.name + ": cannot identify a vertex with itself");
  if (c.graph.degree(u) != 1 || c.graph.degree(v) != 1) throw ValidationError(c.name + ": identified vertices must be leaves");
  if (c.graph.adjacent(u, v)) throw ValidationError(c.name + ": identified leaves must not be adjacent");
  if (u > v) std::swap(u, v);
  // w keeps u's id; ids above v shift down by one.
  auto remap = [&](Vertex x) { return x == v ? u : (x > v ? x - 1 : x); };
  const Vertex a = c.graph.neighbors(u).front(), b = c.graph.neighbors(v).front();
  if (a == b) return std::nullopt;  // the merge would create a double edge
  Graph g(n - 1);
  for (auto [x, y] : c.graph.edges()) g.add_edge(remap(x), remap(y));
  if (!girth_ok(g)) return std::nullopt;
  VertexMap<int> md;
  VertexMap<char> pre;
  std::vector<std::string> names;
  for (Vertex x = 0; x < n; ++x) {
    if (x == v) continue;
    md.push_back(x == u ? 2 : c.md[x]);
    pre.push_back(x == u ? static_cast<char>(c.precolored[u] || c.precolored[v]) : c.precolored[x]);
    names.push_back(x == u ? c.vertex_name(u) + "." + c.vertex_name(v) : c.vertex_name(x));
  }
  return derived_copy(c.name + "+id(" + c.vertex_name(u) + "," + c.vertex_name(v) + ")", std::move(g), std::move(md),
                      std::move(pre), std::move(names), c);
}

std::vector<Configuration> expand(const Configuration& c) {
  std::vector<Vertex> deficient;
  for (Vertex v = 0; v < c.order(); ++v) {
    if (c.ext(v) > 0) deficient.push_back(v);
  }
  std::vector<Configuration> out;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  auto keep = [&](Configuration next) {
    const auto h = invariant_hash(next);
    auto& bucket = seen[h];
    for (std::size_t i : bucket) {
      if (isomorphic(out[i], next)) return;
    }
    bucket.push_back(out.size());
    out.push_back(std::move(next));
  };
  const auto base_names = names_of(c);
  for (std::size_t i = 0; i < deficient.size(); ++i) {
    for (std::size_t j = i + 1; j < deficient.size(); ++j) {
      const Vertex u = deficient[i], v = deficient[j];
      const std::string pair = "(" + c.vertex_name(u) + "," + c.vertex_name(v) + ")";
      if (!c.graph.adjacent(u, v)) {
        Graph g = c.graph;
        g.add_edge(u, v);
        keep(derived_copy(c.name + "+uv" + pair, std::move(g), c.md, c.precolored, base_names, c));
      }
      Graph g = c.graph;
      const Vertex w = g.add_vertex();
      g.add_edge(u, w);
      g.add_edge(v, w);
      VertexMap<int> md = c.md;
      md.push_back(3);
      VertexMap<char> pre = c.precolored;
      pre.push_back(0);
      auto names = base_names;
      names.push_back("w" + std::to_string(w));
      keep(derived_copy(c.name + "+w" + pair, std::move(g), std::move(md), std::move(pre), std::move(names), c));
    }
  }
  return out;
}

ClosureResult generate_closure(std::span<const Configuration> seeds, const ClosureCaps& caps,
                               std::span<const Configuration> exceptions) {
  if (caps.max_vertices <= 0 || caps.max_configs == 0) throw ValidationError("closure caps must be positive");
  ClosureResult result;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;

  auto try_add = [&](Configuration c, Stage stage, const std::string& parent) {
    if (stage != Stage::basic && c.order() > caps.max_vertices) {
      ++result.pruned_by_size;
      return;
    }
    const auto h = invariant_hash(c);
    auto& bucket = index[h];
    for (std::size_t i : bucket) {
      if (isomorphic(result.members[i].config, c)) return;
    }
    if (result.members.size() >= caps.max_configs) {
      result.capped = true;
      return;
    }
    bucket.push_back(result.members.size());
    if (stage == Stage::identified) ++result.identified;
    if (stage == Stage::added) ++result.added;
    result.members.push_back({std::move(c), stage, parent, {}});
  };

  for (const Configuration& s : seeds) try_add(s, Stage::basic, "");

  // Leaf identifications, iterated to a fixed point.
  for (std::size_t i = 0; i < result.members.size() && !result.capped; ++i) {
    const Configuration current = result.members[i].config;
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < current.order(); ++v) {
      if (current.graph.degree(v) == 1) leaves.push_back(v);
    }
    for (std::size_t a = 0; a < leaves.size(); ++a) {
      for (std::size_t b = a + 1; b < leaves.size(); ++b) {
        if (current.graph.adjacent(leaves[a], leaves[b])) continue;
        auto merged = identify_leaves(current, leaves[a], leaves[b]);
        if (!merged) {
          ++result.rejected_by_girth;
          continue;
        }
        try_add(std::move(*merged), Stage::identified, current.name);
      }
    }
  }

  // Additions on everything found so far.
  std::size_t explored = 0;
  for (std::size_t i = 0; i < result.members.size() && !result.capped; ++i) {
    const Configuration current = result.members[i].config;
    if (current.order() <= caps.max_vertices) {
      for (Configuration& next : expand(current)) {
        if (!girth_ok(next.graph)) {
          ++result.rejected_by_girth;
          continue;
        }
        try_add(std::move(next), Stage::added, current.name);
        if (result.capped) break;
      }
    }
    if (!result.capped) explored = i + 1;
  }
  if (result.capped) result.frontier = result.members.size() - explored;

  for (ClosureMember& m : result.members) {
    for (const Configuration& x : exceptions) {
      if (contains(m.config, x)) m.contains_exceptions.push_back(x.name);
    }
  }
  return result;
}

}  // namespace injv
