#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "injv/error.hpp"
#include "injv/planar.hpp"
#include "support/oracles.hpp"

using namespace injv;

namespace {

PlaneGraph hexagon() {
  std::vector<std::pair<double, double>> xy;
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    xy.emplace_back(std::cos(i * M_PI / 3), std::sin(i * M_PI / 3));
    edges.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
  }
  return oracle::from_coordinates(xy, edges);
}

PlaneGraph cube() {
  const std::vector<std::pair<double, double>> xy{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return oracle::from_coordinates(xy, edges);
}

std::vector<PlaneGraph> samples() {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(INJV_SAMPLES)) {
    if (entry.path().extension() == ".rot") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<PlaneGraph> out;
  for (const auto& p : paths) out.push_back(read_rotation_file(p.string()));
  return out;
}

std::vector<int> lengths(const PlaneGraph& pg) {
  std::vector<int> out;
  for (const Face& f : pg.faces()) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

bool pairwise_far(const PlaneGraph& pg, int at_least) {
  const Graph& g = pg.graph();
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) continue;
    const auto dist = distances_from(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.degree(v) == 2 && dist[v] >= 0 && dist[v] < at_least) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("C6 has two faces of length 6") {
  const PlaneGraph pg = hexagon();
  CHECK(lengths(pg) == std::vector<int>{6, 6});
  CHECK(euler_holds(pg));
}

TEST_CASE("K2 has one face of length 2") {
  const PlaneGraph pg = PlaneGraph::from_rotation({{1}, {0}});
  REQUIRE(pg.faces().size() == 1);
  CHECK(pg.faces()[0].length() == 2);
  CHECK(pg.faces()[0].edges() == std::vector<Edge>{{0, 1}});
  CHECK(pg.faces()[0].visits(0) == 1);
  CHECK(euler_holds(pg));
}

TEST_CASE("cube has six faces of length 4") {
  const PlaneGraph pg = cube();
  CHECK(lengths(pg) == std::vector<int>(6, 4));
  CHECK(euler_holds(pg));
  CHECK(pg.outer_face() == 0);  // lowest id among the longest faces
}

TEST_CASE("face tracing follows the successor of the incoming vertex") {
  const PlaneGraph pg = cube();
  for (const Face& f : pg.faces()) {
    const auto& walk = f.walk;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Arc in = walk[i], out = walk[(i + 1) % walk.size()];
      REQUIRE(in.head == out.tail);
      const auto& rot = pg.rotation(in.head);
      const auto at = std::find(rot.begin(), rot.end(), in.tail) - rot.begin();
      CHECK(out.head == rot[(at + 1) % rot.size()]);
      CHECK(pg.face_of_arc(in.tail, in.head) == f.id);
    }
  }
}

TEST_CASE("bridges count twice in a face length") {
  // Two triangles joined by a bridge: 7 edges, the outer walk uses the bridge twice.
  const std::vector<std::pair<double, double>> xy{{0, 0}, {1, 1}, {1, -1}, {3, 0}, {4, 1}, {4, -1}};
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  const PlaneGraph pg = oracle::from_coordinates(xy, edges);
  CHECK(lengths(pg) == std::vector<int>{3, 3, 8});
  const Face& outer = pg.face(pg.outer_face());
  CHECK(outer.length() == 8);
  CHECK(outer.edges().size() == 7);
  CHECK(outer.visits(2) == 2);
}

TEST_CASE("faces partition the arcs of random rotation systems") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + t % 9, 0.4);
    std::vector<std::vector<Vertex>> rotation(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nb = g.neighbors(v);
      rotation[v].assign(nb.begin(), nb.end());
      std::shuffle(rotation[v].begin(), rotation[v].end(), rng);
    }
    const PlaneGraph pg(g, rotation);
    int total = 0;
    std::vector<std::vector<int>> used(g.order(), std::vector<int>(g.order(), 0));
    for (const Face& f : pg.faces()) {
      total += f.length();
      for (const Arc& a : f.walk) ++used[a.tail][a.head];
    }
    CHECK(total == 2 * g.size());
    for (auto [u, v] : g.edges()) {
      CHECK(used[u][v] == 1);
      CHECK(used[v][u] == 1);
    }
  }
}

TEST_CASE("Euler's formula holds on generated patches and every shipped sample") {
  for (int rows = 2; rows <= 6; ++rows) {
    for (int cols = 3; cols <= 8; ++cols) {
      const PlaneGraph pg = oracle::hex_patch(rows, cols);
      if (pg.order() == 0) continue;
      CHECK(euler_holds(pg));
      int total = 0;
      for (const Face& f : pg.faces()) total += f.length();
      CHECK(total == 2 * pg.graph().size());
    }
  }
  const auto all = samples();
  CHECK(all.size() >= 10);
  for (const PlaneGraph& pg : all) CHECK(euler_holds(pg));
}

TEST_CASE("a non-planar rotation fails Euler") {
  // K_{3,3} cannot be embedded, whatever the rotation.
  std::vector<std::vector<Vertex>> rot{{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  CHECK_FALSE(euler_holds(PlaneGraph::from_rotation(rot)));
}

TEST_CASE("malformed rotations name the vertex") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  try {
    PlaneGraph pg(g, {{1}, {0}, {1}});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
  }
  CHECK_THROWS_AS(PlaneGraph(g, {{1}, {0, 0}, {1}}), ValidationError);
  CHECK_THROWS_AS(PlaneGraph::from_rotation({{1}, {}}), ValidationError);
  PlaneGraph ok(g, {{1}, {0, 2}, {1}});
  CHECK_THROWS_AS(ok.set_outer_face(5), ValidationError);
  CHECK_THROWS_AS(ok.face_of_arc(0, 2), ValidationError);
}

TEST_CASE("I and N of a hexagon's inner face") {
  const PlaneGraph pg = hexagon();
  for (const Face& f : pg.faces()) {
    const auto in = incident_and_nearby(pg, f);
    CHECK(in.incident.size() == 6);
    CHECK(in.nearby.empty());
  }
}

TEST_CASE("a pendant-path 2-vertex is nearby a 6-face of 3-vertices") {
  std::vector<std::pair<double, double>> xy;
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) xy.emplace_back(std::cos(i * M_PI / 3), std::sin(i * M_PI / 3));
  for (int i = 0; i < 6; ++i) xy.emplace_back(2 * std::cos(i * M_PI / 3), 2 * std::sin(i * M_PI / 3));
  xy.emplace_back(3, 0);
  for (int i = 0; i < 6; ++i) {
    edges.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
    edges.emplace_back(i, i + 6);
  }
  edges.emplace_back(6, 12);
  const PlaneGraph pg = oracle::from_coordinates(xy, edges);
  int hexagons = 0;
  for (const Face& f : pg.faces()) {
    if (f.length() != 6) continue;
    ++hexagons;
    const auto in = incident_and_nearby(pg, f);
    CHECK(in.incident.empty());
    CHECK(in.nearby == std::vector<Vertex>{6});
  }
  CHECK(hexagons == 1);
}

TEST_CASE("W set of a 2-vertex between two 3-vertices has six edges") {
  const PlaneGraph pg = oracle::theta(2, 4, 5);
  const Vertex u = 2;  // the middle of the 2-edge path
  REQUIRE(pg.graph().degree(u) == 2);
  const auto w = w_set(pg, u);
  CHECK(w.size() == 6);
  for (auto [a, b] : w) CHECK((a == 0 || b == 0 || a == 1 || b == 1));
  CHECK_THROWS_AS(w_set(pg, 0), ValidationError);
}

TEST_CASE("W sets on the shipped samples") {
  int disjoint_pairs = 0;
  for (const PlaneGraph& pg : samples()) {
    const Graph& g = pg.graph();
    for (Vertex u = 0; u < g.order(); ++u) {
      if (g.degree(u) != 2) continue;
      const auto wu = w_set(pg, u);
      // u on f with both neighbors on f: at least 4 boundary edges of f are in W_u.
      for (int fid : pg.corner_faces(u)) {
        const auto boundary = pg.face(fid).edges();
        std::vector<Edge> common;
        std::set_intersection(wu.begin(), wu.end(), boundary.begin(), boundary.end(), std::back_inserter(common));
        const auto nb = g.neighbors(u);
        if (g.degree(nb[0]) == 3 && g.degree(nb[1]) == 3) CHECK(common.size() >= 4);
      }
      const auto dist = distances_from(g, u);
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (g.degree(v) != 2 || dist[v] < 4) continue;
        const auto wv = w_set(pg, v);
        std::vector<Edge> common;
        std::set_intersection(wu.begin(), wu.end(), wv.begin(), wv.end(), std::back_inserter(common));
        CHECK(common.empty());
        ++disjoint_pairs;
      }
    }
  }
  CHECK(disjoint_pairs > 0);
}

TEST_CASE("face length bound when 2-vertices are pairwise at distance >= 4") {
  int faces = 0;
  for (const PlaneGraph& pg : samples()) {
    if (!pairwise_far(pg, 4)) continue;
    for (const Face& f : pg.faces()) {
      const auto in = incident_and_nearby(pg, f);
      CHECK(f.length() >= 4 * static_cast<int>(in.incident.size()) + 2 * static_cast<int>(in.nearby.size()));
      ++faces;
    }
  }
  CHECK(faces > 0);
}

TEST_CASE("rotation text round trip and errors") {
  std::istringstream in("# hexagon\n6\n0: 1 5\n1: 2 0\n2: 3 1\n3: 4 2\n4: 5 3\n5: 0 4\nouter: 1\n");
  const PlaneGraph pg = parse_rotation(in);
  CHECK(pg.order() == 6);
  CHECK(pg.outer_face() == 1);
  std::stringstream text;
  write_rotation(text, pg);
  const PlaneGraph again = parse_rotation(text);
  CHECK(again.graph() == pg.graph());
  CHECK(again.outer_face() == 1);
  for (Vertex v = 0; v < 6; ++v) CHECK(again.rotation(v) == pg.rotation(v));

  std::istringstream asym("2\n0: 1\n1:\n");
  CHECK_THROWS(parse_rotation(asym));
  std::istringstream bad_line("3\n0 1 2\n");
  try {
    parse_rotation(bad_line);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream bad_outer("2\n0: 1\n1: 0\nouter: 4\n");
  CHECK_THROWS_AS(parse_rotation(bad_outer), ParseError);
  std::istringstream isolated("3\n0: 1\n1: 0\n");
  CHECK(parse_rotation(isolated).graph().degree(2) == 0);
}
