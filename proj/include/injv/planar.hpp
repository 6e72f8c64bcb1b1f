#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "injv/graph.hpp"

namespace injv {

/// Directed copy of an edge.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  bool operator==(const Arc&) const = default;
};

struct Face {
  int id = 0;
  /// Boundary walk; walk[i].head == walk[i+1].tail cyclically.
  std::vector<Arc> walk;

  /// Number of arcs in the walk, so a bridge on the boundary counts twice.
  int length() const { return static_cast<int>(walk.size()); }
  /// Distinct boundary vertices, sorted.
  std::vector<Vertex> vertices() const;
  /// Distinct boundary edges, sorted.
  std::vector<Edge> edges() const;
  /// How many times the walk passes through v.
  int visits(Vertex v) const;
};

/// Graph plus a clockwise rotation at every vertex.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Throws ValidationError naming the first vertex whose rotation is not a
  /// permutation of its neighborhood.
  PlaneGraph(Graph graph, std::vector<std::vector<Vertex>> rotation);

  /// Builds a graph from the rotation itself (which must be symmetric).
  static PlaneGraph from_rotation(std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  int order() const noexcept { return graph_.order(); }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }

  /// Face whose walk contains the arc u->v.
  int face_of_arc(Vertex u, Vertex v) const;

  /// Faces at the corners of v, one per incident arc v->w in rotation order.
  /// A face appears twice when the walk visits v twice.
  std::vector<int> corner_faces(Vertex v) const;

  int outer_face() const noexcept { return outer_; }
  /// Throws ValidationError for an id that is not a face.
  void set_outer_face(int id);

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Face> faces_;
  // arc_face_[v][i]: face containing v -> rotation_[v][i]
  std::vector<std::vector<int>> arc_face_;
  int outer_ = -1;
};

/// Face tracing: after arc u->v the walk continues with v->w, where w follows
/// u in the rotation at v. Every arc lies on exactly one face.
std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

/// Index of the longest face, lowest id on ties; -1 when there are no faces.
int longest_face(const std::vector<Face>& faces);

/// V - E + F = 2 on every component that has an edge.
bool euler_holds(const PlaneGraph& pg);

struct FaceNeighborhood {
  /// Degree-2 vertices on the boundary.
  std::vector<Vertex> incident;
  /// Degree-2 vertices off the boundary that are adjacent to a boundary vertex.
  std::vector<Vertex> nearby;
};

FaceNeighborhood incident_and_nearby(const PlaneGraph& pg, const Face& f);

/// Edges incident to a neighbor of u. Throws ValidationError unless deg(u) = 2.
std::vector<Edge> w_set(const PlaneGraph& pg, Vertex u);

/// Rotation text: a line `n`, then `v: u1 u2 ... uk` per vertex (clockwise
/// order; omitted vertices are isolated), optionally `outer: <face>`.
/// '#' starts a comment.
PlaneGraph parse_rotation(std::istream& in);
PlaneGraph read_rotation_file(const std::string& path);
void write_rotation(std::ostream& out, const PlaneGraph& pg);

}  // namespace injv
