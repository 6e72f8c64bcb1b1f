#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "injv/choose.hpp"
#include "injv/graph.hpp"

namespace injv {

/// How a record is expected to verify.
enum class Label {
  greedy,      // "G": greedy peeling of the neighboring graph
  alon_tarsi,  // "AT": nonzero Alon-Tarsi coefficient
  exception,   // not colorable from the declared sizes
  special,     // stored for reference only, no colorability claim
};

std::string_view to_string(Label l);
std::optional<Label> parse_label(std::string_view text);

/// A cycle of H annotated with the length of the face it bounds.
struct FaceLabel {
  int length = 0;
  std::vector<Vertex> cycle;
  bool operator==(const FaceLabel&) const = default;
};

/// A named pair (or set) of edges whose removal separates the configuration.
struct EdgeCut {
  std::string label;
  std::vector<Edge> edges;
  bool operator==(const EdgeCut&) const = default;
};

/// A configuration (H, md) with list sizes and bookkeeping.
///
/// ext(v) = md(v) - deg_H(v) counts the edges v has outside H.
struct Configuration {
  std::string name;
  std::string group;
  Graph graph;
  VertexMap<int> md;
  SizeVector declared_sizes;
  VertexMap<char> precolored;
  Label label = Label::alon_tarsi;
  std::vector<FaceLabel> faces;
  std::vector<EdgeCut> cuts;
  /// For exceptions: lists with |L(v)| = declared(v) admitting no coloring.
  std::optional<ListAssignment> bad_assignment;
  std::vector<std::string> provenance;
  /// Display names; vertex i is "v<i>" when empty.
  std::vector<std::string> vertex_names;

  int order() const noexcept { return graph.order(); }
  int ext(Vertex v) const { return md.at(v) - graph.degree(v); }
  bool has_precolored() const;
  std::string vertex_name(Vertex v) const;

  bool operator==(const Configuration&) const = default;
};

/// Builds a configuration with sizes taken from external_list_sizes.
Configuration make_configuration(std::string name, Graph graph, VertexMap<int> md,
                                 VertexMap<char> precolored = {});

/// Throws ValidationError (message starts with the record name) when a
/// structural invariant fails: deg <= md <= 3, sizes >= 1, girth >= 6,
/// declared <= derived sizes without precolored vertices, annotations
/// referring to real cycles and edges, bad assignment shaped like the sizes.
void validate(const Configuration& c);

/// Worst-case sizes: 1 for precolored vertices, otherwise
/// max(0, 5 - 2 ext(v) - sum of ext(u) over H-neighbors u).
SizeVector external_list_sizes(const Configuration& c);

// ---------------------------------------------------------------------------
// Catalog text

/// Records `config NAME` ... `end` with lines
///   group TEXT | method G|AT|exception|special
///   vertex NAME MD [SIZE] [precolored]
///   edges A-B C-D ...
///   face LEN: V1 V2 ...        cut LABEL: A-B C-D ...
///   list NAME: C1 C2 ...       provenance TEXT
/// Omitted sizes default to the derived ones. '#' starts a comment.
std::vector<Configuration> parse_catalog(std::istream& in);
std::vector<Configuration> read_catalog_file(const std::string& path);
void write_configuration(std::ostream& out, const Configuration& c);
void write_catalog(std::ostream& out, std::span<const Configuration> catalog);

// ---------------------------------------------------------------------------
// Verification

struct VerifyOptions {
  /// Also run the engine the label does not ask for.
  bool cross_check = false;
  /// For exceptions, search with the oracle even when lists are shipped.
  bool search_exceptions = false;
  AtLimits at_limits;
  OracleLimits oracle_limits{24, 200'000'000};
};

struct VerifyReport {
  std::string name;
  Label label = Label::alon_tarsi;
  /// The label's expectation was met and its certificate re-checked.
  bool passed = false;
  std::optional<GreedyResult> greedy;
  std::optional<AtResult> alon_tarsi;
  std::optional<OracleResult> oracle;
  /// Bad assignment that was re-checked by exhaustive list coloring.
  std::optional<ListAssignment> bad_assignment;
  double seconds = 0;
  std::string note;
  bool operator==(const VerifyReport&) const = default;
};

VerifyReport verify_configuration(const Configuration& c, const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Isomorphism (respecting md and precolored flags)

/// Invariant under isomorphism; equal configurations hash equal.
std::uint64_t invariant_hash(const Configuration& c);
bool isomorphic(const Configuration& a, const Configuration& b);

/// Whether `pattern` appears in `host` as a subconfiguration: an injective
/// edge-preserving map with md_host(image) <= md_pattern.
bool contains(const Configuration& host, const Configuration& pattern);

// ---------------------------------------------------------------------------
// Closure

/// Merges leaves u and v into one vertex w with md(w) = 2. Returns nullopt
/// when the result has girth below 6. Throws ValidationError unless u, v are
/// distinct non-adjacent leaves.
std::optional<Configuration> identify_leaves(const Configuration& c, Vertex u, Vertex v);

/// One step of the additive closure on every pair of deficient vertices
/// (ext > 0): add the edge uv if absent, or add a new vertex w ~ u, v with
/// md(w) = 3. Results are deduplicated up to isomorphism; no girth filter.
std::vector<Configuration> expand(const Configuration& c);

struct ClosureCaps {
  int max_vertices = 14;
  std::size_t max_configs = 50'000;
};

enum class Stage { basic, identified, added };
std::string_view to_string(Stage s);

struct ClosureMember {
  Configuration config;
  Stage stage = Stage::basic;
  std::string parent;
  /// Names of the exception patterns it contains.
  std::vector<std::string> contains_exceptions;
};

struct ClosureResult {
  std::vector<ClosureMember> members;
  std::size_t identified = 0;
  std::size_t added = 0;
  std::size_t pruned_by_size = 0;
  std::size_t rejected_by_girth = 0;
  bool capped = false;
  /// Members whose expansions were not explored because the cap was hit.
  std::size_t frontier = 0;
};

/// Leaf identifications from the seeds first, then additions, both kept only
/// with girth >= 6 and deduplicated up to isomorphism. Seeds are kept even
/// when larger than the vertex cap.
ClosureResult generate_closure(std::span<const Configuration> seeds, const ClosureCaps& caps,
                               std::span<const Configuration> exceptions = {});

// ---------------------------------------------------------------------------

/// Precolored set P with fixed colors: true iff the colors properly color the
/// neighboring graph restricted to P and P induces at most two paths, each on
/// at most three vertices.
bool validate_precoloring(const Graph& g, std::span<const std::pair<Vertex, int>> colored);

}  // namespace injv
