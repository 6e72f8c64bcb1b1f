#include "injv/discharge.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "injv/error.hpp"

namespace injv {

long ChargeLedger::total(int at_stage) const {
  const auto& v = vertex.at(at_stage);
  const auto& f = face.at(at_stage);
  return std::accumulate(v.begin(), v.end(), 0L) + std::accumulate(f.begin(), f.end(), 0L);
}

namespace {

std::vector<char> precolored_mask(const AuditInput& a) {
  std::vector<char> mask(a.pg.order(), 0);
  for (Vertex p : a.precolored) {
    if (p < 0 || p >= a.pg.order()) throw ValidationError("precolored vertex " + std::to_string(p) + " out of range");
    mask[p] = 1;
  }
  return mask;
}

}  // namespace

ChargeLedger initial_charges(const AuditInput& a) {
  const Graph& g = a.pg.graph();
  const auto pre = precolored_mask(a);
  std::set<Vertex> distinct(a.precolored.begin(), a.precolored.end());
  const int p_count = static_cast<int>(distinct.size());
  ChargeLedger ledger;
  auto& vs = ledger.vertex[0];
  auto& fs = ledger.face[0];
  vs.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) vs[v] = pre[v] ? 0 : 2 * g.degree(v) - 6;
  for (const Face& f : a.pg.faces()) {
    fs.push_back(f.id == a.pg.outer_face() ? f.length() - 5 - p_count : f.length() - 6);
  }
  return ledger;
}

long total_charge_identity(const AuditInput& a) {
  const Graph& g = a.pg.graph();
  if (g.order() == 0 || !is_connected(g)) throw ValidationError("charge identity needs a connected graph");
  if (g.size() > 0 && !euler_holds(a.pg)) throw ValidationError("rotation system is not planar (Euler's formula fails)");
  const ChargeLedger ledger = initial_charges(a);
  const long total = ledger.total(0);
  std::set<Vertex> distinct(a.precolored.begin(), a.precolored.end());
  long expected = -11 - static_cast<long>(distinct.size());
  for (Vertex p : distinct) expected += 6 - 2 * g.degree(p);
  // A single vertex has no face; its only charge is -6 (or 0 when precolored).
  if (g.size() == 0) expected = distinct.empty() ? -6 : 0;
  if (total != expected) {
    throw std::logic_error("charge total " + std::to_string(total) + " differs from the Euler value " +
                           std::to_string(expected));
  }
  return total;
}

ChargeLedger apply_rules(ChargeLedger ledger, const AuditInput& a, std::uint64_t order_seed) {
  const PlaneGraph& pg = a.pg;
  const Graph& g = pg.graph();
  const auto pre = precolored_mask(a);
  if (ledger.stage != 0) throw ValidationError("rules start from a stage-0 ledger");

  std::vector<Vertex> two_vertices;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2 && !pre[v]) two_vertices.push_back(v);
  }
  if (order_seed != 0) {
    std::mt19937_64 rng(order_seed);
    std::shuffle(two_vertices.begin(), two_vertices.end(), rng);
  }
  auto length = [&](int f) { return pg.face(f).length(); };

  for (int stage = 1; stage < ChargeLedger::stages; ++stage) {
    const auto& entry_v = ledger.vertex[stage - 1];
    auto vs = ledger.vertex[stage - 1];
    auto fs = ledger.face[stage - 1];
    auto pull = [&](int rule, int face, Vertex v, int amount) {
      fs[face] -= amount;
      vs[v] += amount;
      ledger.log.push_back({rule, face, v, amount});
    };
    for (Vertex v : two_vertices) {
      const auto corners = pg.corner_faces(v);
      const int f1 = corners[0], f2 = corners[1];
      const int l1 = length(f1), l2 = length(f2);
      switch (stage) {
        case 1:
          if (l1 == 6 && l2 >= 8) pull(1, f2, v, 2);
          else if (l2 == 6 && l1 >= 8) pull(1, f1, v, 2);
          break;
        case 2:
          if (l1 >= 7 && l2 >= 7) {
            pull(2, f1, v, 1);
            pull(2, f2, v, 1);
          }
          break;
        case 3:
          if (l1 == 6 && l2 == 7) pull(3, f2, v, 1);
          else if (l2 == 6 && l1 == 7) pull(3, f1, v, 1);
          break;
        case 4: {
          if (entry_v[v] >= 0) break;
          std::set<int> candidates;
          for (Vertex w : g.neighbors(v)) {
            for (int f : pg.corner_faces(w)) candidates.insert(f);
          }
          int needed = -entry_v[v];
          for (int f : candidates) {
            if (needed == 0) break;
            if (length(f) < 7 || pg.face(f).visits(v) > 0) continue;
            pull(4, f, v, 1);
            --needed;
          }
          break;
        }
        case 5:
          if (entry_v[v] < 0 && pg.outer_face() >= 0) pull(5, pg.outer_face(), v, 2);
          break;
      }
    }
    ledger.vertex[stage] = std::move(vs);
    ledger.face[stage] = std::move(fs);
    ledger.stage = stage;
  }
  return ledger;
}

// ---------------------------------------------------------------------------
// Audit

namespace {

// Bridges by DFS low-link.
std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    // Iterative DFS: (vertex, parent, next neighbor index)
    std::vector<std::tuple<Vertex, Vertex, std::size_t>> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      auto& [v, parent, i] = stack.back();
      auto nb = g.neighbors(v);
      if (i < nb.size()) {
        Vertex w = nb[i++];
        if (w == parent) continue;
        if (disc[w] >= 0) {
          low[v] = std::min(low[v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.emplace_back(w, v, 0);
        }
      } else {
        const Vertex child = v, up = parent;
        stack.pop_back();
        if (up >= 0) {
          low[up] = std::min(low[up], low[child]);
          if (low[child] > disc[up]) out.emplace_back(std::min(up, child), std::max(up, child));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Violation> hypothesis_violations(const AuditInput& a) {
  const PlaneGraph& pg = a.pg;
  const Graph& g = pg.graph();
  const auto pre = precolored_mask(a);
  std::vector<Violation> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 3) out.push_back({"degree", {v}, "degree " + std::to_string(g.degree(v))});
    if (g.degree(v) <= 1 && !pre[v]) out.push_back({"leaf", {v}, "vertex of degree " + std::to_string(g.degree(v)) + " not precolored"});
    if (g.degree(v) == 2 && pre[v]) out.push_back({"precolored-2-vertex", {v}, "precolored vertex of degree 2"});
  }
  if (auto gi = girth(g); gi && *gi < 6) out.push_back({"girth", {}, "girth " + std::to_string(*gi)});
  std::vector<Vertex> twos;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2 && !pre[v]) twos.push_back(v);
  }
  for (Vertex u : twos) {
    const auto dist = distances_from(g, u);
    for (Vertex v : twos) {
      if (v > u && dist[v] >= 0 && dist[v] < 4) {
        out.push_back({"2-vertex-distance", {u, v}, "2-vertices at distance " + std::to_string(dist[v])});
      }
    }
    const auto corners = pg.corner_faces(u);
    if (corners[0] == corners[1]) out.push_back({"repeated-face", {u}, "both corners on face " + std::to_string(corners[0])});
  }
  for (auto [x, y] : bridges(g)) out.push_back({"bridge", {x, y}, "bridge"});
  if (!a.precolored.empty()) {
    const int outer = pg.outer_face();
    std::vector<std::pair<Vertex, int>> colored;
    for (std::size_t i = 0; i < a.precolored.size(); ++i) {
      const Vertex p = a.precolored[i];
      colored.emplace_back(p, static_cast<int>(i));
      if (outer < 0 || pg.face(outer).visits(p) == 0) out.push_back({"precolored-inner", {p}, "precolored vertex off the outer face"});
    }
    if (!validate_precoloring(g, colored)) {
      out.push_back({"precolored-shape", a.precolored, "precolored set is not at most two paths on at most three vertices"});
    }
  }
  return out;
}

bool AuditReport::all_explained() const {
  return std::all_of(negatives.begin(), negatives.end(), [](const Explanation& e) { return e.explained(); });
}

AuditReport audit(const AuditInput& a, std::span<const Configuration> catalog) {
  const PlaneGraph& pg = a.pg;
  const Graph& g = pg.graph();
  const auto pre = precolored_mask(a);
  AuditReport report;
  report.ledger = apply_rules(initial_charges(a), a);
  report.initial_total = report.ledger.total(0);
  report.final_total = report.ledger.total(ChargeLedger::stages - 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2 || pre[v]) continue;
    if (report.ledger.vertex[3][v] < 0) report.needy.push_back(v);
    if (report.ledger.vertex[4][v] < 0) report.bad.push_back(v);
  }
  report.violations = hypothesis_violations(a);

  for (const Configuration& c : catalog) {
    if (c.label != Label::greedy && c.label != Label::alon_tarsi) continue;
    for (Embedding& image : find_appearances(g, c.graph, c.md)) {
      if (std::any_of(image.begin(), image.end(), [&](Vertex h) { return pre[h] != 0; })) continue;
      report.appearances.push_back({c.name, std::move(image)});
    }
  }

  auto explain = [&](Element element, int charge, const std::vector<Vertex>& vicinity) {
    std::vector<char> near(g.order(), 0);
    for (Vertex v : vicinity) near[v] = 1;
    Explanation e{element, charge, {}, {}};
    for (std::size_t i = 0; i < report.appearances.size(); ++i) {
      const auto& image = report.appearances[i].image;
      if (std::any_of(image.begin(), image.end(), [&](Vertex h) { return near[h] != 0; })) e.appearances.push_back(i);
    }
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
      const auto& vs = report.violations[i].vertices;
      if (vs.empty() || std::any_of(vs.begin(), vs.end(), [&](Vertex h) { return near[h] != 0; })) e.violations.push_back(i);
    }
    report.negatives.push_back(std::move(e));
  };

  const auto& final_v = report.ledger.vertex[ChargeLedger::stages - 1];
  const auto& final_f = report.ledger.face[ChargeLedger::stages - 1];
  for (Vertex v = 0; v < g.order(); ++v) {
    if (final_v[v] >= 0) continue;
    std::vector<Vertex> vicinity{v};
    for (Vertex w : g.neighbors(v)) vicinity.push_back(w);
    explain({false, v}, final_v[v], vicinity);
  }
  for (const Face& f : pg.faces()) {
    if (final_f[f.id] >= 0) continue;
    std::vector<Vertex> vicinity = f.vertices();
    const auto around = incident_and_nearby(pg, f);
    vicinity.insert(vicinity.end(), around.nearby.begin(), around.nearby.end());
    explain({true, f.id}, final_f[f.id], vicinity);
  }
  return report;
}

std::vector<Vertex> read_precolored_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::vector<Vertex> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    int v = 0;
    if (!(row >> v)) {
      std::string rest;
      if (std::istringstream(line) >> rest) throw ParseError("expected a vertex id", line_no);
      continue;
    }
    if (v < 0) throw ParseError("negative vertex id", line_no);
    out.push_back(v);
  }
  return out;
}

}  // namespace injv
