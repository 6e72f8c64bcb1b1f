#include "injv/choose.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "injv/error.hpp"

namespace injv {

namespace {

void check_sizes(const Graph& g, const SizeVector& f) {
  if (static_cast<int>(f.size()) != g.order()) throw ValidationError("size vector does not cover the graph");
  for (int s : f) {
    if (s < 0) throw ValidationError("negative list size");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Greedy

GreedyResult greedy_choosable(const Graph& g, const SizeVector& f, std::optional<std::uint64_t> seed) {
  check_sizes(g, f);
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  GreedyResult result;
  result.order.reserve(n);
  std::vector<Vertex> eligible;
  for (;;) {
    eligible.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < f[v]) eligible.push_back(v);
    }
    if (eligible.empty()) break;
    Vertex v = eligible.front();
    if (rng) v = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(*rng)];
    removed[v] = 1;
    result.order.push_back(v);
    for (Vertex w : g.neighbors(v)) --deg[w];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) result.residual.push_back(v);
  }
  result.choosable = result.residual.empty();
  return result;
}

bool is_valid_peel_order(const Graph& g, const SizeVector& f, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.order() || static_cast<int>(f.size()) != g.order()) return false;
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= g.order() || position[v] >= 0) return false;
    position[v] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    int later = 0;
    for (Vertex w : g.neighbors(v)) later += position[w] > position[v];
    if (later >= f[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Alon-Tarsi

namespace {

// Expands the graph polynomial keeping only monomials whose exponents stay
// within `cap`. Monomials are mixed-radix packed into 64 bits.
class CappedExpansion {
 public:
  CappedExpansion(const Graph& g, const std::vector<int>& cap, std::uint64_t max_states)
      : g_(g), cap_(cap), max_states_(max_states), stride_(g.order()) {
    std::uint64_t s = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      stride_[v] = s;
      const auto radix = static_cast<std::uint64_t>(cap[v] + 1);
      if (s > UINT64_MAX / radix) throw CapacityError("monomial packing exceeds 64 bits");
      s *= radix;
    }
  }

  std::unordered_map<std::uint64_t, std::int64_t> run() {
    std::vector<Edge> edges = g_.edges();
    std::unordered_map<std::uint64_t, std::int64_t> current{{0, 1}}, next;
    for (auto [u, v] : edges) {
      next.clear();
      next.reserve(current.size() * 2);
      for (auto [key, coef] : current) {
        if (exponent(key, u) < cap_[u]) next[key + stride_[u]] += coef;
        if (exponent(key, v) < cap_[v]) next[key + stride_[v]] -= coef;
      }
      current.clear();
      for (auto& [key, coef] : next) {
        if (coef != 0) current.emplace(key, coef);
      }
      if (current.size() > max_states_) throw CapacityError("Alon-Tarsi expansion exceeds the state limit");
      if (current.empty()) break;
    }
    return current;
  }

  int exponent(std::uint64_t key, Vertex v) const {
    return static_cast<int>((key / stride_[v]) % static_cast<std::uint64_t>(cap_[v] + 1));
  }

  ExponentVector decode(std::uint64_t key) const {
    ExponentVector d(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) d[v] = exponent(key, v);
    return d;
  }

 private:
  const Graph& g_;
  const std::vector<int>& cap_;
  std::uint64_t max_states_;
  std::vector<std::uint64_t> stride_;
};

}  // namespace

std::int64_t at_coefficient(const Graph& g, const ExponentVector& d) {
  if (static_cast<int>(d.size()) != g.order()) throw ValidationError("exponent vector does not cover the graph");
  long total = 0;
  for (int e : d) {
    if (e < 0) throw ValidationError("negative exponent");
    total += e;
  }
  if (total != g.size()) {
    throw ValidationError("exponents sum to " + std::to_string(total) + ", expected |E| = " +
                          std::to_string(g.size()));
  }
  if (g.size() >= 63) throw CapacityError("coefficient may overflow 64 bits");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d[v] > g.degree(v)) return 0;
  }
  CappedExpansion expansion(g, d, UINT64_MAX);
  auto terms = expansion.run();
  // Homogeneous of degree |E| with every exponent capped by d: only d survives.
  if (terms.empty()) return 0;
  return terms.begin()->second;
}

AtResult at_choosable(const Graph& g, const SizeVector& f, const AtLimits& limits) {
  check_sizes(g, f);
  AtResult result;
  if (std::any_of(f.begin(), f.end(), [](int s) { return s == 0; })) return result;
  if (g.size() >= 63) throw CapacityError("Alon-Tarsi coefficients may overflow 64 bits");
  std::vector<int> cap(g.order());
  long cap_total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    cap[v] = std::min(f[v] - 1, g.degree(v));
    cap_total += cap[v];
  }
  if (cap_total < g.size()) return result;
  CappedExpansion expansion(g, cap, limits.max_states);
  auto terms = expansion.run();
  if (terms.empty()) return result;
  auto best = std::min_element(terms.begin(), terms.end(),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
  result.choosable = true;
  result.witness = expansion.decode(best->first);
  result.coefficient = best->second;
  return result;
}

// ---------------------------------------------------------------------------
// Explicit lists

std::optional<Coloring> list_color(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  if (static_cast<int>(lists.size()) != n) throw ValidationError("list assignment does not cover the graph");
  int max_color = -1;
  for (const auto& l : lists) {
    for (int c : l) {
      if (c < 0) throw ValidationError("negative color");
      max_color = std::max(max_color, c);
    }
  }
  const int colors = max_color + 1;
  // blocked[v * colors + c]: number of colored neighbors of v using c.
  std::vector<int> blocked(static_cast<std::size_t>(n) * std::max(colors, 1), 0);
  Coloring phi(n, -1);

  auto available = [&](Vertex v) {
    int count = 0;
    for (int c : lists[v]) count += blocked[static_cast<std::size_t>(v) * colors + c] == 0;
    return count;
  };
  auto paint = [&](Vertex v, int c, int delta) {
    for (Vertex w : g.neighbors(v)) blocked[static_cast<std::size_t>(w) * colors + c] += delta;
  };

  auto solve = [&](auto& self, int remaining) -> bool {
    if (remaining == 0) return true;
    Vertex pick = -1;
    int fewest = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (phi[v] >= 0) continue;
      int a = available(v);
      if (a == 0) return false;
      if (pick < 0 || a < fewest) {
        pick = v;
        fewest = a;
      }
    }
    for (int c : lists[pick]) {
      if (blocked[static_cast<std::size_t>(pick) * colors + c] != 0) continue;
      phi[pick] = c;
      paint(pick, c, 1);
      if (self(self, remaining - 1)) return true;
      paint(pick, c, -1);
      phi[pick] = -1;
    }
    return false;
  };
  if (!solve(solve, n)) return std::nullopt;
  return phi;
}

bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
  if (static_cast<int>(phi.size()) != g.order() || static_cast<int>(lists.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::find(lists[v].begin(), lists[v].end(), phi[v]) == lists[v].end()) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (phi[u] == phi[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Oracle
//
// Vertices are processed in a fixed order. After step i the search keeps the
// set of proper colorings of the prefix, projected onto the frontier (prefix
// vertices with a neighbor outside the prefix). Lists are chosen adversarially
// one vertex at a time; only colors present in the frontier set matter, so each
// list is a k-subset of those colors plus fresh ones. An empty set is a bad
// assignment. Colors are renamed canonically so equal situations share a memo entry.

namespace {

class Oracle {
 public:
  Oracle(const Graph& g, const SizeVector& f, const OracleLimits& limits) : g_(g), f_(f), limits_(limits) {
    const int n = g.order();
    order_ = processing_order();
    position_.assign(n, 0);
    for (int i = 0; i < n; ++i) position_[order_[i]] = i;
    // frontier_[i]: frontier after processing order_[0..i).
    frontier_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < i; ++j) {
        Vertex v = order_[j];
        for (Vertex w : g.neighbors(v)) {
          if (position_[w] >= i) {
            frontier_[i].push_back(v);
            break;
          }
        }
      }
    }
  }

  OracleResult run() {
    OracleResult result;
    lists_.assign(g_.order(), {});
    State start;
    start.width = 0;
    start.rows = 1;
    std::vector<int> globals;
    next_global_ = 0;
    result.choosable = search(0, start, globals);
    result.nodes = nodes_;
    if (!result.choosable) {
      // Vertices after the failure point get arbitrary fresh lists.
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (static_cast<int>(lists_[v].size()) != f_[v]) {
          lists_[v].clear();
          for (int k = 0; k < f_[v]; ++k) lists_[v].push_back(next_global_++);
        }
        std::sort(lists_[v].begin(), lists_[v].end());
      }
      result.bad_assignment = lists_;
    }
    return result;
  }

 private:
  struct State {
    int width = 0;
    int rows = 0;
    std::vector<std::uint8_t> cells;  // rows x width, rows sorted
  };

  std::vector<Vertex> processing_order() const {
    const int n = g_.order();
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    auto frontier_size = [&](Vertex extra) {
      int count = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (!placed[v] && v != extra) continue;
        for (Vertex w : g_.neighbors(v)) {
          if (!placed[w] && w != extra) {
            ++count;
            break;
          }
        }
      }
      return count;
    };
    while (static_cast<int>(order.size()) < n) {
      Vertex best = -1;
      int best_cost = 0, best_links = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (Vertex w : g_.neighbors(v)) links += placed[w];
        int cost = frontier_size(v);
        if (best < 0 || cost < best_cost || (cost == best_cost && links > best_links)) {
          best = v;
          best_cost = cost;
          best_links = links;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
    return order;
  }

  // Renames colors by first appearance and sorts rows, repeated until stable.
  // Returns old color -> new color (-1 when the color vanished).
  static std::vector<int> canonicalize(State& s, int colors) {
    std::vector<int> total(colors);
    std::iota(total.begin(), total.end(), 0);
    for (;;) {
      const std::vector<std::uint8_t> previous = s.cells;
      std::vector<int> rename(colors, -1);
      int next = 0;
      for (auto& c : s.cells) {
        if (rename[c] < 0) rename[c] = next++;
        c = static_cast<std::uint8_t>(rename[c]);
      }
      for (int& t : total) t = t >= 0 ? rename[t] : -1;
      sort_rows(s);
      if (s.cells == previous) break;
    }
    return total;
  }

  static void sort_rows(State& s) {
    if (s.width == 0) {
      s.rows = std::min(s.rows, 1);
      s.cells.clear();
      return;
    }
    std::vector<std::vector<std::uint8_t>> rows(s.rows);
    for (int r = 0; r < s.rows; ++r) rows[r].assign(s.cells.begin() + r * s.width, s.cells.begin() + (r + 1) * s.width);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    s.rows = static_cast<int>(rows.size());
    s.cells.clear();
    for (auto& row : rows) s.cells.insert(s.cells.end(), row.begin(), row.end());
  }

  static int color_count(const State& s) {
    int m = 0;
    for (auto c : s.cells) m = std::max(m, c + 1);
    return m;
  }

  // True when every extension of the lists from step i onward is colorable.
  // globals[c] is the global color behind local color c.
  bool search(int i, const State& state, const std::vector<int>& globals) {
    const int n = g_.order();
    if (i == n) return true;
    if (++nodes_ > limits_.max_nodes) throw CapacityError("oracle node limit reached");
    std::string key = std::to_string(i) + ':' + std::to_string(state.width) + ':';
    key.append(state.cells.begin(), state.cells.end());
    if (state.width == 0) key += std::to_string(state.rows);
    if (good_.count(key)) return true;

    const Vertex v = order_[i];
    const auto& before = frontier_[i];
    const auto& after = frontier_[i + 1];
    // Columns of `before` that v must avoid, and how to build the next row.
    std::vector<int> conflict_cols;
    for (int c = 0; c < static_cast<int>(before.size()); ++c) {
      if (g_.adjacent(before[c], v)) conflict_cols.push_back(c);
    }
    std::vector<int> keep_cols;  // index into before, or -1 for v itself
    for (Vertex u : after) {
      if (u == v) {
        keep_cols.push_back(-1);
      } else {
        keep_cols.push_back(static_cast<int>(std::find(before.begin(), before.end(), u) - before.begin()));
      }
    }

    // Lists are an e-subset of the colors in play plus k - e fresh colors;
    // fresh colors are interchangeable. Larger overlaps are tried first.
    const int existing = color_count(state);
    const int k = f_[v];
    bool all_good = true;
    for (int e = std::min(k, existing); e >= 0 && all_good; --e) {
      std::vector<int> pick(e);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        std::vector<int> list(pick);
        for (int t = 0; t < k - e; ++t) list.push_back(existing + t);
        if (!try_list(i, state, globals, list, existing, conflict_cols, keep_cols)) {
          all_good = false;
          break;
        }
        int j = e - 1;
        while (j >= 0 && pick[j] == existing - e + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < e; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
    if (all_good) good_.insert(std::move(key));
    return all_good;
  }

  bool try_list(int i, const State& state, const std::vector<int>& globals, const std::vector<int>& list,
                int existing, const std::vector<int>& conflict_cols, const std::vector<int>& keep_cols) {
    const Vertex v = order_[i];
    const int before_width = state.width;
    State next;
    next.width = static_cast<int>(keep_cols.size());
    for (int r = 0; r < state.rows; ++r) {
      const std::uint8_t* row = state.cells.data() + static_cast<std::size_t>(r) * before_width;
      for (int c : list) {
        bool ok = true;
        for (int col : conflict_cols) {
          if (row[col] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        ++next.rows;
        for (int col : keep_cols) next.cells.push_back(col < 0 ? static_cast<std::uint8_t>(c) : row[col]);
      }
    }
    // Record the list in global colors; fresh local colors get new global names.
    std::vector<int> local_to_global(existing + static_cast<int>(list.size()), -1);
    for (int c = 0; c < existing; ++c) local_to_global[c] = globals[c];
    const int saved_next = next_global_;
    lists_[v].clear();
    for (int c : list) {
      if (local_to_global[c] < 0) local_to_global[c] = next_global_++;
      lists_[v].push_back(local_to_global[c]);
    }
    if (next.rows == 0) return false;
    const int colors = existing + static_cast<int>(list.size());
    std::vector<int> rename = canonicalize(next, colors);
    std::vector<int> next_globals(color_count(next), -1);
    for (int c = 0; c < colors; ++c) {
      if (rename[c] >= 0) next_globals[rename[c]] = local_to_global[c];
    }
    if (search(i + 1, next, next_globals)) {
      next_global_ = saved_next;
      return true;
    }
    return false;
  }

  const Graph& g_;
  const SizeVector& f_;
  OracleLimits limits_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<std::vector<Vertex>> frontier_;
  std::unordered_set<std::string> good_;
  ListAssignment lists_;
  int next_global_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult oracle_choosable(const Graph& g, const SizeVector& f, const OracleLimits& limits) {
  check_sizes(g, f);
  if (g.order() > limits.max_vertices) {
    throw CapacityError("oracle limited to " + std::to_string(limits.max_vertices) + " vertices");
  }
  long pool = std::accumulate(f.begin(), f.end(), 0L);
  if (pool > 255) throw CapacityError("oracle color pool exceeds 255");
  Oracle oracle(g, f, limits);
  return oracle.run();
}

// ---------------------------------------------------------------------------
// Driver

std::string_view to_string(Method m) {
  switch (m) {
    case Method::greedy: return "greedy";
    case Method::alon_tarsi: return "at";
    case Method::oracle: return "oracle";
    case Method::automatic: return "auto";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "greedy" || text == "G") return Method::greedy;
  if (text == "at" || text == "AT" || text == "alon-tarsi") return Method::alon_tarsi;
  if (text == "oracle") return Method::oracle;
  if (text == "auto") return Method::automatic;
  return std::nullopt;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::choosable: return "choosable";
    case Outcome::not_choosable: return "not-choosable";
    case Outcome::not_certified: return "not-certified";
    case Outcome::undecided: return "undecided";
  }
  return "?";
}

Verdict decide_choosable(const Graph& g, const SizeVector& f, Method method, const OracleLimits& limits) {
  check_sizes(g, f);
  Verdict verdict;
  const bool automatic = method == Method::automatic;
  if (method == Method::greedy || automatic) {
    verdict.certified_by = Method::greedy;
    verdict.greedy = greedy_choosable(g, f);
    if (verdict.greedy->choosable) {
      verdict.outcome = Outcome::choosable;
      return verdict;
    }
    verdict.outcome = Outcome::not_certified;
    if (!automatic) return verdict;
  }
  if (method == Method::alon_tarsi || automatic) {
    verdict.certified_by = Method::alon_tarsi;
    try {
      verdict.alon_tarsi = at_choosable(g, f);
      if (verdict.alon_tarsi->choosable) {
        verdict.outcome = Outcome::choosable;
        return verdict;
      }
      verdict.outcome = Outcome::not_certified;
    } catch (const CapacityError& e) {
      verdict.outcome = Outcome::undecided;
      verdict.note = e.what();
    }
    if (!automatic) return verdict;
  }
  verdict.certified_by = Method::oracle;
  try {
    verdict.oracle = oracle_choosable(g, f, limits);
    verdict.outcome = verdict.oracle->choosable ? Outcome::choosable : Outcome::not_choosable;
  } catch (const CapacityError& e) {
    verdict.outcome = Outcome::undecided;
    verdict.note = e.what();
  }
  return verdict;
}

Verdict injective_choosable(const Graph& g, const SizeVector& f, Method method, const OracleLimits& limits) {
  return decide_choosable(neighboring_graph(g), f, method, limits);
}

}  // namespace injv
