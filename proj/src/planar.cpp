#include "injv/planar.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "injv/error.hpp"

namespace injv {

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(walk.size());
  for (const Arc& a : walk) out.push_back(a.tail);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  out.reserve(walk.size());
  for (const Arc& a : walk) out.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Face::visits(Vertex v) const {
  return static_cast<int>(std::count_if(walk.begin(), walk.end(), [v](const Arc& a) { return a.tail == v; }));
}

namespace {

void check_rotation(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.order()) throw ValidationError("rotation does not cover every vertex");
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw ValidationError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }
}

int rotation_index(const std::vector<Vertex>& rot, Vertex w) {
  return static_cast<int>(std::find(rot.begin(), rot.end(), w) - rot.begin());
}

}  // namespace

std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  check_rotation(g, rotation);
  std::vector<std::vector<char>> used(g.order());
  for (Vertex v = 0; v < g.order(); ++v) used[v].assign(rotation[v].size(), 0);
  std::vector<Face> faces;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (std::size_t i = 0; i < rotation[s].size(); ++i) {
      if (used[s][i]) continue;
      Face face;
      face.id = static_cast<int>(faces.size());
      Vertex u = s;
      int idx = static_cast<int>(i);
      while (!used[u][idx]) {
        used[u][idx] = 1;
        const Vertex v = rotation[u][idx];
        face.walk.push_back({u, v});
        const auto& rv = rotation[v];
        const int back = rotation_index(rv, u);
        idx = (back + 1) % static_cast<int>(rv.size());
        u = v;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int longest_face(const std::vector<Face>& faces) {
  int best = -1;
  for (const Face& f : faces) {
    if (best < 0 || f.length() > faces[best].length()) best = f.id;
  }
  return best;
}

PlaneGraph::PlaneGraph(Graph graph, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  faces_ = trace_faces(graph_, rotation_);
  arc_face_.resize(graph_.order());
  for (Vertex v = 0; v < graph_.order(); ++v) arc_face_[v].assign(rotation_[v].size(), -1);
  for (const Face& f : faces_) {
    for (const Arc& a : f.walk) arc_face_[a.tail][rotation_index(rotation_[a.tail], a.head)] = f.id;
  }
  outer_ = longest_face(faces_);
}

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<Vertex>> rotation) {
  Graph g(static_cast<int>(rotation.size()));
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : rotation[v]) {
      if (w < 0 || w >= g.order()) {
        throw ValidationError("rotation at vertex " + std::to_string(v) + " names unknown vertex " + std::to_string(w));
      }
      if (w == v) throw ValidationError("rotation at vertex " + std::to_string(v) + " contains a loop");
      g.add_edge(v, w);
    }
  }
  return PlaneGraph(std::move(g), std::move(rotation));
}

int PlaneGraph::face_of_arc(Vertex u, Vertex v) const {
  const auto& rot = rotation_.at(u);
  const int i = rotation_index(rot, v);
  if (i == static_cast<int>(rot.size())) {
    throw ValidationError("no arc " + std::to_string(u) + "->" + std::to_string(v));
  }
  return arc_face_[u][i];
}

std::vector<int> PlaneGraph::corner_faces(Vertex v) const { return arc_face_.at(v); }

void PlaneGraph::set_outer_face(int id) {
  if (id < 0 || id >= static_cast<int>(faces_.size())) {
    throw ValidationError("outer face " + std::to_string(id) + " does not exist");
  }
  outer_ = id;
}

bool euler_holds(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  // Component label per vertex.
  std::vector<int> comp(g.order(), -1);
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<long> vertices(count, 0), edges(count, 0), faces(count, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    ++vertices[comp[v]];
    edges[comp[v]] += g.degree(v);
  }
  for (const Face& f : pg.faces()) ++faces[comp[f.walk.front().tail]];
  for (int c = 0; c < count; ++c) {
    if (edges[c] == 0) continue;
    if (vertices[c] - edges[c] / 2 + faces[c] != 2) return false;
  }
  return true;
}

FaceNeighborhood incident_and_nearby(const PlaneGraph& pg, const Face& f) {
  const Graph& g = pg.graph();
  FaceNeighborhood out;
  const std::vector<Vertex> boundary = f.vertices();
  std::vector<char> on(g.order(), 0);
  for (Vertex v : boundary) {
    on[v] = 1;
    if (g.degree(v) == 2) out.incident.push_back(v);
  }
  std::set<Vertex> nearby;
  for (Vertex v : boundary) {
    for (Vertex w : g.neighbors(v)) {
      if (!on[w] && g.degree(w) == 2) nearby.insert(w);
    }
  }
  out.nearby.assign(nearby.begin(), nearby.end());
  return out;
}

std::vector<Edge> w_set(const PlaneGraph& pg, Vertex u) {
  const Graph& g = pg.graph();
  if (g.degree(u) != 2) {
    throw ValidationError("W set needs a 2-vertex; vertex " + std::to_string(u) + " has degree " +
                          std::to_string(g.degree(u)));
  }
  std::vector<Edge> out;
  for (Vertex v : g.neighbors(u)) {
    for (Vertex w : g.neighbors(v)) out.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PlaneGraph parse_rotation(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<char> seen;
  int outer = -1, outer_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string head;
    if (!(row >> head)) continue;
    if (n < 0) {
      try {
        std::size_t used = 0;
        n = std::stoi(head, &used);
        if (used != head.size() || n < 0) throw std::invalid_argument(head);
      } catch (const std::exception&) {
        throw ParseError("expected vertex count", line_no);
      }
      rotation.assign(n, {});
      seen.assign(n, 0);
      continue;
    }
    if (head.back() != ':') {
      // Allow "v :" as well as "v:".
      std::string colon;
      if (!(row >> colon) || colon != ":") throw ParseError("expected `v: neighbors` or `outer: k`", line_no);
    } else {
      head.pop_back();
    }
    if (head == "outer") {
      if (!(row >> outer) || outer < 0) throw ParseError("expected a face index after `outer:`", line_no);
      outer_line = line_no;
      continue;
    }
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(head, &used);
      if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
      throw ParseError("bad vertex id `" + head + "`", line_no);
    }
    if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", line_no);
    if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice", line_no);
    seen[v] = 1;
    std::string token;
    while (row >> token) {
      try {
        std::size_t used = 0;
        int w = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        rotation[v].push_back(w);
      } catch (const std::exception&) {
        throw ParseError("bad neighbor `" + token + "`", line_no);
      }
    }
  }
  if (n < 0) throw ParseError("missing vertex count", line_no);
  PlaneGraph pg;
  try {
    pg = PlaneGraph::from_rotation(std::move(rotation));
    if (outer >= 0) pg.set_outer_face(outer);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), outer >= 0 && std::string(e.what()).find("outer") != std::string::npos ? outer_line : 0);
  }
  return pg;
}

PlaneGraph read_rotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_rotation(in);
}

void write_rotation(std::ostream& out, const PlaneGraph& pg) {
  out << pg.order() << '\n';
  for (Vertex v = 0; v < pg.order(); ++v) {
    out << v << ':';
    for (Vertex w : pg.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  if (pg.outer_face() >= 0) out << "outer: " << pg.outer_face() << '\n';
}

}  // namespace injv
