#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "injv/catalog.hpp"
#include "injv/planar.hpp"

namespace injv {

/// Plane graph, precolored vertices and (through the plane graph) the outer face.
struct AuditInput {
  PlaneGraph pg;
  std::vector<Vertex> precolored;
};

/// Charge always flows from a face to a 2-vertex.
struct Transfer {
  int rule = 0;  // 1..5
  int face = 0;
  Vertex vertex = 0;
  int amount = 0;
  bool operator==(const Transfer&) const = default;
};

/// Charges of every vertex and face after each stage 0..5. Stage i is the
/// state after rules R1..Ri.
struct ChargeLedger {
  static constexpr int stages = 6;
  int stage = 0;
  std::array<std::vector<int>, stages> vertex;
  std::array<std::vector<int>, stages> face;
  std::vector<Transfer> log;

  long total(int at_stage) const;
  bool operator==(const ChargeLedger&) const = default;
};

/// Stage-0 charges: 2 deg(v) - 6 for vertices, 0 for precolored ones,
/// len(f) - 6 for faces and len(F_o) - 5 - |P| for the outer face.
ChargeLedger initial_charges(const AuditInput& a);

/// Sum of the stage-0 charges. Checks it against
/// -11 - |P| + sum over P of (6 - 2 deg(p)); throws ValidationError for
/// disconnected inputs or rotations failing Euler's formula, and
/// std::logic_error if the identity fails.
long total_charge_identity(const AuditInput& a);

/// Applies R1, R2, R3, R4, R5 in order from a stage-0 ledger. Within a stage
/// every decision reads the charges at stage entry.
///
/// A 2-vertex with corner faces f1, f2 (not precolored):
///   R1  lengths 6 and >= 8: 2 from the longer face
///   R2  both >= 7: 1 from each
///   R3  lengths 6 and 7: 1 from the 7-face
///   R4  if its charge is negative: 1 from each face of length >= 7 that
///       touches a neighbor but not the vertex, lowest id first, only as many
///       as needed
///   R5  if its charge is still negative: 2 from the outer face
/// `order_seed` shuffles the order vertices are processed within a stage.
ChargeLedger apply_rules(ChargeLedger ledger, const AuditInput& a, std::uint64_t order_seed = 0);

struct Violation {
  std::string kind;
  std::vector<Vertex> vertices;  // empty when the violation is global
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct Appearance {
  std::string config;
  Embedding image;
  bool operator==(const Appearance&) const = default;
};

struct Element {
  bool is_face = false;
  int id = 0;
  bool operator==(const Element&) const = default;
};

struct Explanation {
  Element element;
  int charge = 0;
  std::vector<std::size_t> appearances;  // indices into AuditReport::appearances
  std::vector<std::size_t> violations;   // indices into AuditReport::violations
  bool explained() const { return !appearances.empty() || !violations.empty(); }
  bool operator==(const Explanation&) const = default;
};

struct AuditReport {
  ChargeLedger ledger;
  long initial_total = 0;
  long final_total = 0;
  std::vector<Vertex> needy;
  std::vector<Vertex> bad;
  std::vector<Violation> violations;
  std::vector<Appearance> appearances;
  std::vector<Explanation> negatives;
  bool all_explained() const;
  bool operator==(const AuditReport&) const = default;
};

/// Hypothesis checks: degree above 3, girth below 6, leaves and 2-vertices
/// that are precolored or not, 2-vertices closer than 4, 2-vertices meeting
/// one face twice, bridges, precolored vertices off the outer face, and the
/// shape of the precolored set.
std::vector<Violation> hypothesis_violations(const AuditInput& a);

/// Runs the rules and explains every element left negative by an appearance
/// of a catalog configuration (G or AT records) or a violation touching it.
/// A vertex's vicinity is its closed neighborhood; a face's is its boundary
/// plus its nearby 2-vertices.
AuditReport audit(const AuditInput& a, std::span<const Configuration> catalog);

/// Precolored file: one vertex id per line, optionally followed by a color.
std::vector<Vertex> read_precolored_file(const std::string& path);

}  // namespace injv
