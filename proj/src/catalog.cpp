#include "injv/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "injv/error.hpp"

namespace injv {

std::string_view to_string(Label l) {
  switch (l) {
    case Label::greedy: return "G";
    case Label::alon_tarsi: return "AT";
    case Label::exception: return "exception";
    case Label::special: return "special";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "G") return Label::greedy;
  if (text == "AT") return Label::alon_tarsi;
  if (text == "exception") return Label::exception;
  if (text == "special") return Label::special;
  return std::nullopt;
}

bool Configuration::has_precolored() const {
  return std::any_of(precolored.begin(), precolored.end(), [](char p) { return p != 0; });
}

std::string Configuration::vertex_name(Vertex v) const {
  if (v >= 0 && v < static_cast<int>(vertex_names.size())) return vertex_names[v];
  return "v" + std::to_string(v);
}

SizeVector external_list_sizes(const Configuration& c) {
  SizeVector f(c.order());
  for (Vertex v = 0; v < c.order(); ++v) {
    if (!c.precolored.empty() && c.precolored[v]) {
      f[v] = 1;
      continue;
    }
    int lost = 2 * c.ext(v);
    for (Vertex u : c.graph.neighbors(v)) lost += c.ext(u);
    f[v] = std::max(0, 5 - lost);
  }
  return f;
}

Configuration make_configuration(std::string name, Graph graph, VertexMap<int> md, VertexMap<char> precolored) {
  Configuration c;
  c.name = std::move(name);
  c.graph = std::move(graph);
  c.md = std::move(md);
  c.precolored = precolored.empty() ? VertexMap<char>(c.graph.order(), 0) : std::move(precolored);
  c.declared_sizes = external_list_sizes(c);
  return c;
}

void validate(const Configuration& c) {
  auto fail = [&](const std::string& what) { throw ValidationError(c.name + ": " + what); };
  const int n = c.order();
  if (static_cast<int>(c.md.size()) != n) fail("md does not cover every vertex");
  if (static_cast<int>(c.declared_sizes.size()) != n) fail("list sizes do not cover every vertex");
  if (static_cast<int>(c.precolored.size()) != n) fail("precolored flags do not cover every vertex");
  if (!c.vertex_names.empty() && static_cast<int>(c.vertex_names.size()) != n) fail("vertex names do not cover every vertex");
  for (Vertex v = 0; v < n; ++v) {
    if (c.md[v] > 3) fail("md(" + c.vertex_name(v) + ") exceeds 3");
    if (c.graph.degree(v) > c.md[v]) fail("deg(" + c.vertex_name(v) + ") exceeds its md");
    if (c.declared_sizes[v] < 1) fail("list size of " + c.vertex_name(v) + " is below 1");
    if (c.precolored[v] && c.declared_sizes[v] != 1) fail("precolored " + c.vertex_name(v) + " must have list size 1");
  }
  if (auto g = girth(c.graph); g && *g < 6) fail("girth " + std::to_string(*g) + " is below 6");
  if (!c.has_precolored()) {
    const SizeVector derived = external_list_sizes(c);
    for (Vertex v = 0; v < n; ++v) {
      if (c.declared_sizes[v] > derived[v]) {
        fail("declared size " + std::to_string(c.declared_sizes[v]) + " of " + c.vertex_name(v) +
             " exceeds the derived size " + std::to_string(derived[v]));
      }
    }
  }
  for (const FaceLabel& f : c.faces) {
    const auto& cyc = f.cycle;
    if (static_cast<int>(cyc.size()) != f.length) fail("face label length does not match its cycle");
    std::set<Vertex> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size() || cyc.size() < 3) fail("face label is not a cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= n || b < 0 || b >= n || !c.graph.adjacent(a, b)) fail("face label is not a cycle of H");
    }
  }
  for (const EdgeCut& cut : c.cuts) {
    for (auto [a, b] : cut.edges) {
      if (a < 0 || a >= n || b < 0 || b >= n || !c.graph.adjacent(a, b)) fail("cut `" + cut.label + "` names a missing edge");
    }
  }
  if (c.bad_assignment) {
    if (static_cast<int>(c.bad_assignment->size()) != n) fail("bad assignment does not cover every vertex");
    for (Vertex v = 0; v < n; ++v) {
      const auto& l = (*c.bad_assignment)[v];
      std::set<int> distinct(l.begin(), l.end());
      if (static_cast<int>(distinct.size()) != c.declared_sizes[v] || static_cast<int>(l.size()) != c.declared_sizes[v]) {
        fail("list of " + c.vertex_name(v) + " does not have the declared size");
      }
    }
  }
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void run_greedy(VerifyReport& r, const Graph& sq, const SizeVector& f) {
  r.greedy = greedy_choosable(sq, f);
  if (r.greedy->choosable && !is_valid_peel_order(sq, f, r.greedy->order)) {
    throw std::logic_error("greedy returned an invalid peel order");
  }
}

void run_at(VerifyReport& r, const Graph& sq, const SizeVector& f, const AtLimits& limits) {
  r.alon_tarsi = at_choosable(sq, f, limits);
  if (r.alon_tarsi->choosable) {
    const auto& d = *r.alon_tarsi->witness;
    for (Vertex v = 0; v < sq.order(); ++v) {
      if (d[v] > f[v] - 1) throw std::logic_error("Alon-Tarsi witness exceeds a list size");
    }
    if (at_coefficient(sq, d) == 0) throw std::logic_error("Alon-Tarsi witness has a zero coefficient");
  }
}

}  // namespace

VerifyReport verify_configuration(const Configuration& c, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.name = c.name;
  r.label = c.label;
  const Graph sq = neighboring_graph(c.graph);
  const SizeVector& f = c.declared_sizes;
  try {
    switch (c.label) {
      case Label::greedy:
        run_greedy(r, sq, f);
        r.passed = r.greedy->choosable;
        if (options.cross_check) run_at(r, sq, f, options.at_limits);
        if (!r.passed) r.note = "greedy peeling gets stuck";
        break;
      case Label::alon_tarsi:
        run_at(r, sq, f, options.at_limits);
        r.passed = r.alon_tarsi->choosable;
        if (options.cross_check) run_greedy(r, sq, f);
        if (!r.passed) r.note = "no exponent vector with a nonzero coefficient";
        break;
      case Label::exception: {
        std::optional<ListAssignment> lists = c.bad_assignment;
        if (!lists || options.search_exceptions) {
          r.oracle = oracle_choosable(sq, f, options.oracle_limits);
          if (r.oracle->bad_assignment) lists = r.oracle->bad_assignment;
          else lists.reset();
        }
        if (lists) {
          bool sized = static_cast<int>(lists->size()) == c.order();
          for (Vertex v = 0; sized && v < c.order(); ++v) sized = static_cast<int>((*lists)[v].size()) == f[v];
          if (sized && !list_color(sq, *lists)) {
            r.passed = true;
            r.bad_assignment = lists;
          } else {
            r.note = "assignment is colorable or misshapen";
          }
        } else {
          r.note = "oracle found the configuration choosable";
        }
        if (options.cross_check) {
          run_greedy(r, sq, f);
          run_at(r, sq, f, options.at_limits);
        }
        break;
      }
      case Label::special:
        r.passed = true;
        r.note = "reference record; no colorability claim";
        if (options.cross_check) {
          run_greedy(r, sq, f);
          run_at(r, sq, f, options.at_limits);
        }
        break;
    }
  } catch (const CapacityError& e) {
    r.passed = false;
    r.note = std::string("capacity: ") + e.what();
  }
  r.seconds = seconds_since(start);
  return r;
}

bool validate_precoloring(const Graph& g, std::span<const std::pair<Vertex, int>> colored) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> members;
  for (auto [v, c] : colored) {
    if (v < 0 || v >= g.order() || color[v] >= 0 || c < 0) return false;
    color[v] = c;
    members.push_back(v);
  }
  // Proper in the neighboring graph: vertices sharing a neighbor differ.
  for (Vertex w = 0; w < g.order(); ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (color[nb[i]] >= 0 && color[nb[i]] == color[nb[j]]) return false;
      }
    }
  }
  const Graph induced = induced_subgraph(g, members);
  if (induced.max_degree() > 2) return false;
  if (girth(induced)) return false;
  if (count_components(induced) > 2) return false;
  std::vector<char> seen(induced.order(), 0);
  for (Vertex s = 0; s < induced.order(); ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : induced.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (size > 3) return false;
  }
  return true;
}

}  // namespace injv
