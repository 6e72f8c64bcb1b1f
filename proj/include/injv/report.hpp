#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "injv/catalog.hpp"
#include "injv/choose.hpp"
#include "injv/discharge.hpp"

namespace injv {

using json = nlohmann::json;

// Structured reports emitted by inj-verify. Every type here converts to JSON
// and back without loss: from_json(to_json(r)) == r.

struct CatalogReport {
  std::string catalog;
  bool cross_check = false;
  std::vector<VerifyReport> records;
  double seconds = 0;
  bool operator==(const CatalogReport&) const = default;
};

struct ChoosableReport {
  std::string graph;
  bool injective = false;
  Method method = Method::automatic;
  SizeVector sizes;
  Verdict verdict;
  /// Certificate replayed by an independent check.
  bool rechecked = false;
  bool operator==(const ChoosableReport&) const = default;
};

struct ClosureEntry {
  std::string name;
  Stage stage = Stage::basic;
  std::string parent;
  int order = 0;
  int size = 0;
  std::vector<std::string> contains_exceptions;
  std::optional<VerifyReport> verify;
  bool operator==(const ClosureEntry&) const = default;
};

struct ClosureReport {
  int max_vertices = 0;
  std::uint64_t max_configs = 0;
  std::uint64_t identified = 0;
  std::uint64_t added = 0;
  std::uint64_t pruned_by_size = 0;
  std::uint64_t rejected_by_girth = 0;
  bool capped = false;
  std::uint64_t frontier = 0;
  std::vector<ClosureEntry> members;
  bool operator==(const ClosureReport&) const = default;
};

ClosureReport summarize(const ClosureResult& r, const ClosureCaps& caps);

struct DischargeReport {
  std::string rotation;
  int outer_face = 0;
  std::vector<int> face_lengths;
  std::vector<Vertex> precolored;
  long identity = 0;
  AuditReport audit;
  bool operator==(const DischargeReport&) const = default;
};

struct SolveReport {
  std::string graph;
  std::optional<std::uint64_t> seed;
  ListAssignment lists;
  std::optional<Coloring> coloring;
  bool rechecked = false;
  bool operator==(const SolveReport&) const = default;
};

void to_json(json& j, const GreedyResult& r);
void from_json(const json& j, GreedyResult& r);
void to_json(json& j, const AtResult& r);
void from_json(const json& j, AtResult& r);
void to_json(json& j, const OracleResult& r);
void from_json(const json& j, OracleResult& r);
void to_json(json& j, const Verdict& r);
void from_json(const json& j, Verdict& r);
void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);
void to_json(json& j, const CatalogReport& r);
void from_json(const json& j, CatalogReport& r);
void to_json(json& j, const ChoosableReport& r);
void from_json(const json& j, ChoosableReport& r);
void to_json(json& j, const ClosureEntry& r);
void from_json(const json& j, ClosureEntry& r);
void to_json(json& j, const ClosureReport& r);
void from_json(const json& j, ClosureReport& r);
void to_json(json& j, const Transfer& r);
void from_json(const json& j, Transfer& r);
void to_json(json& j, const ChargeLedger& r);
void from_json(const json& j, ChargeLedger& r);
void to_json(json& j, const Violation& r);
void from_json(const json& j, Violation& r);
void to_json(json& j, const Appearance& r);
void from_json(const json& j, Appearance& r);
void to_json(json& j, const Element& r);
void from_json(const json& j, Element& r);
void to_json(json& j, const Explanation& r);
void from_json(const json& j, Explanation& r);
void to_json(json& j, const AuditReport& r);
void from_json(const json& j, AuditReport& r);
void to_json(json& j, const DischargeReport& r);
void from_json(const json& j, DischargeReport& r);
void to_json(json& j, const SolveReport& r);
void from_json(const json& j, SolveReport& r);

/// Pretty-printed JSON text, and its inverse.
template <typename Report>
std::string emit(const Report& r) {
  return json(r).dump(2);
}

template <typename Report>
Report parse_report(const std::string& text) {
  return json::parse(text).get<Report>();
}

}  // namespace injv
