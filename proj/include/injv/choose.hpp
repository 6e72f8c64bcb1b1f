#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "injv/graph.hpp"

namespace injv {

/// Guaranteed list length per vertex.
using SizeVector = VertexMap<int>;

/// Target out-degree (monomial exponent) per vertex.
using ExponentVector = VertexMap<int>;

/// Color lists per vertex; colors are small nonnegative integers, each list sorted.
using ListAssignment = VertexMap<std::vector<int>>;

using Coloring = VertexMap<int>;

// ---------------------------------------------------------------------------
// Greedy (f-degeneracy)

struct GreedyResult {
  bool choosable = false;
  /// Removal order on success; coloring in reverse order always succeeds.
  std::vector<Vertex> order;
  /// Vertices left when no vertex had current degree below its size.
  std::vector<Vertex> residual;
  bool operator==(const GreedyResult&) const = default;
};

/// Repeatedly removes a vertex whose remaining degree is below its list size.
/// With `seed` set, ties between eligible vertices are broken at random.
GreedyResult greedy_choosable(const Graph& g, const SizeVector& f,
                              std::optional<std::uint64_t> seed = std::nullopt);

/// Replays a peel order: every vertex appears once and has fewer later
/// neighbors than its list size.
bool is_valid_peel_order(const Graph& g, const SizeVector& f, const std::vector<Vertex>& order);

// ---------------------------------------------------------------------------
// Alon-Tarsi
//
// Sign convention: the graph polynomial is the product over edges {u,v},
// u < v, of (x_u - x_v). Only whether a coefficient vanishes matters for
// choosability, but coefficients are reported exactly under this convention.

/// Coefficient of prod x_v^d(v). Requires sum d = |E|; throws ValidationError
/// otherwise and CapacityError if |E| >= 63 (coefficients are bounded by 2^|E|).
std::int64_t at_coefficient(const Graph& g, const ExponentVector& d);

struct AtResult {
  bool choosable = false;
  std::optional<ExponentVector> witness;
  std::int64_t coefficient = 0;
  bool operator==(const AtResult&) const = default;
};

struct AtLimits {
  /// Upper bound on simultaneously stored monomials.
  std::uint64_t max_states = std::uint64_t{1} << 27;
};

/// Searches for d <= f - 1 with sum d = |E| and a nonzero coefficient.
AtResult at_choosable(const Graph& g, const SizeVector& f, const AtLimits& limits = {});

// ---------------------------------------------------------------------------
// Explicit lists

/// A proper coloring with phi(v) in L(v), or nullopt after exhaustive search.
std::optional<Coloring> list_color(const Graph& g, const ListAssignment& lists);

bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi);

// ---------------------------------------------------------------------------
// Oracle

struct OracleLimits {
  int max_vertices = 16;
  std::uint64_t max_nodes = 50'000'000;
};

struct OracleResult {
  bool choosable = false;
  std::optional<ListAssignment> bad_assignment;
  std::uint64_t nodes = 0;
  bool operator==(const OracleResult&) const = default;
};

/// Decides whether g is colorable from every list assignment with |L(v)| = f(v).
/// Colors are drawn from a pool of size sum f; a bad assignment is returned
/// when one exists. Throws CapacityError past the limits.
OracleResult oracle_choosable(const Graph& g, const SizeVector& f, const OracleLimits& limits = {});

// ---------------------------------------------------------------------------
// Text formats

/// Size file: one `v f(v)` line per vertex of an n-vertex graph; '#' starts
/// a comment. Every vertex must appear exactly once.
SizeVector parse_sizes(std::istream& in, int n);
SizeVector read_sizes_file(const std::string& path, int n);

/// Lists file: one `v c1 c2 ...` line per vertex. Lists are sorted and must
/// not repeat a color.
ListAssignment parse_lists(std::istream& in, int n);
ListAssignment read_lists_file(const std::string& path, int n);
void write_lists(std::ostream& out, const ListAssignment& lists);

// ---------------------------------------------------------------------------
// Driver

enum class Method { greedy, alon_tarsi, oracle, automatic };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

/// `not_certified`: the selected certificate engine failed, which proves
/// nothing. `undecided`: a capacity limit stopped the oracle.
enum class Outcome { choosable, not_choosable, not_certified, undecided };

std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::undecided;
  /// Engine that settled the verdict (the last one tried when undecided).
  Method certified_by = Method::automatic;
  std::optional<GreedyResult> greedy;
  std::optional<AtResult> alon_tarsi;
  std::optional<OracleResult> oracle;
  std::string note;
  bool operator==(const Verdict&) const = default;
};

/// Runs `method` on g directly (g is already the graph to be properly colored).
/// `automatic` tries greedy, then Alon-Tarsi, then the oracle within limits.
Verdict decide_choosable(const Graph& g, const SizeVector& f, Method method,
                         const OracleLimits& limits = {});

/// Injective choosability: decide_choosable on neighboring_graph(g).
Verdict injective_choosable(const Graph& g, const SizeVector& f, Method method,
                            const OracleLimits& limits = {});

}  // namespace injv
