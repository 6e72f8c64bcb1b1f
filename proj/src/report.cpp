#include "injv/report.hpp"

#include "injv/error.hpp"

namespace injv {

namespace {

template <typename T>
void put(json& j, const char* key, const std::optional<T>& value) {
  j[key] = value ? json(*value) : json(nullptr);
}

template <typename T>
void take(const json& j, const char* key, std::optional<T>& value) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    value.reset();
  } else {
    value = it->template get<T>();
  }
}

Outcome parse_outcome(const std::string& text) {
  for (Outcome o : {Outcome::choosable, Outcome::not_choosable, Outcome::not_certified, Outcome::undecided}) {
    if (to_string(o) == text) return o;
  }
  throw ValidationError("unknown outcome `" + text + "`");
}

Method method_from(const std::string& text) {
  auto m = parse_method(text);
  if (!m) throw ValidationError("unknown method `" + text + "`");
  return *m;
}

Label label_from(const std::string& text) {
  auto l = parse_label(text);
  if (!l) throw ValidationError("unknown label `" + text + "`");
  return *l;
}

Stage stage_from(const std::string& text) {
  for (Stage s : {Stage::basic, Stage::identified, Stage::added}) {
    if (to_string(s) == text) return s;
  }
  throw ValidationError("unknown closure stage `" + text + "`");
}

}  // namespace

void to_json(json& j, const GreedyResult& r) {
  j = {{"choosable", r.choosable}, {"order", r.order}, {"residual", r.residual}};
}

void from_json(const json& j, GreedyResult& r) {
  j.at("choosable").get_to(r.choosable);
  j.at("order").get_to(r.order);
  j.at("residual").get_to(r.residual);
}

void to_json(json& j, const AtResult& r) {
  j = {{"choosable", r.choosable}, {"coefficient", r.coefficient}};
  put(j, "witness", r.witness);
}

void from_json(const json& j, AtResult& r) {
  j.at("choosable").get_to(r.choosable);
  j.at("coefficient").get_to(r.coefficient);
  take(j, "witness", r.witness);
}

void to_json(json& j, const OracleResult& r) {
  j = {{"choosable", r.choosable}, {"nodes", r.nodes}};
  put(j, "bad_assignment", r.bad_assignment);
}

void from_json(const json& j, OracleResult& r) {
  j.at("choosable").get_to(r.choosable);
  j.at("nodes").get_to(r.nodes);
  take(j, "bad_assignment", r.bad_assignment);
}

void to_json(json& j, const Verdict& r) {
  j = {{"outcome", to_string(r.outcome)}, {"certified_by", to_string(r.certified_by)}, {"note", r.note}};
  put(j, "greedy", r.greedy);
  put(j, "alon_tarsi", r.alon_tarsi);
  put(j, "oracle", r.oracle);
}

void from_json(const json& j, Verdict& r) {
  r.outcome = parse_outcome(j.at("outcome").get<std::string>());
  r.certified_by = method_from(j.at("certified_by").get<std::string>());
  j.at("note").get_to(r.note);
  take(j, "greedy", r.greedy);
  take(j, "alon_tarsi", r.alon_tarsi);
  take(j, "oracle", r.oracle);
}

void to_json(json& j, const VerifyReport& r) {
  j = {{"name", r.name}, {"label", to_string(r.label)}, {"passed", r.passed}, {"seconds", r.seconds}, {"note", r.note}};
  put(j, "greedy", r.greedy);
  put(j, "alon_tarsi", r.alon_tarsi);
  put(j, "oracle", r.oracle);
  put(j, "bad_assignment", r.bad_assignment);
}

void from_json(const json& j, VerifyReport& r) {
  j.at("name").get_to(r.name);
  r.label = label_from(j.at("label").get<std::string>());
  j.at("passed").get_to(r.passed);
  j.at("seconds").get_to(r.seconds);
  j.at("note").get_to(r.note);
  take(j, "greedy", r.greedy);
  take(j, "alon_tarsi", r.alon_tarsi);
  take(j, "oracle", r.oracle);
  take(j, "bad_assignment", r.bad_assignment);
}

void to_json(json& j, const CatalogReport& r) {
  j = {{"catalog", r.catalog}, {"cross_check", r.cross_check}, {"records", r.records}, {"seconds", r.seconds}};
}

void from_json(const json& j, CatalogReport& r) {
  j.at("catalog").get_to(r.catalog);
  j.at("cross_check").get_to(r.cross_check);
  j.at("records").get_to(r.records);
  j.at("seconds").get_to(r.seconds);
}

void to_json(json& j, const ChoosableReport& r) {
  j = {{"graph", r.graph},   {"injective", r.injective}, {"method", to_string(r.method)},
       {"sizes", r.sizes},   {"verdict", r.verdict},     {"rechecked", r.rechecked}};
}

void from_json(const json& j, ChoosableReport& r) {
  j.at("graph").get_to(r.graph);
  j.at("injective").get_to(r.injective);
  r.method = method_from(j.at("method").get<std::string>());
  j.at("sizes").get_to(r.sizes);
  j.at("verdict").get_to(r.verdict);
  j.at("rechecked").get_to(r.rechecked);
}

void to_json(json& j, const ClosureEntry& r) {
  j = {{"name", r.name}, {"stage", to_string(r.stage)}, {"parent", r.parent},
       {"order", r.order}, {"size", r.size}, {"contains_exceptions", r.contains_exceptions}};
  put(j, "verify", r.verify);
}

void from_json(const json& j, ClosureEntry& r) {
  j.at("name").get_to(r.name);
  r.stage = stage_from(j.at("stage").get<std::string>());
  j.at("parent").get_to(r.parent);
  j.at("order").get_to(r.order);
  j.at("size").get_to(r.size);
  j.at("contains_exceptions").get_to(r.contains_exceptions);
  take(j, "verify", r.verify);
}

void to_json(json& j, const ClosureReport& r) {
  j = {{"max_vertices", r.max_vertices},
       {"max_configs", r.max_configs},
       {"identified", r.identified},
       {"added", r.added},
       {"pruned_by_size", r.pruned_by_size},
       {"rejected_by_girth", r.rejected_by_girth},
       {"capped", r.capped},
       {"frontier", r.frontier},
       {"members", r.members}};
}

void from_json(const json& j, ClosureReport& r) {
  j.at("max_vertices").get_to(r.max_vertices);
  j.at("max_configs").get_to(r.max_configs);
  j.at("identified").get_to(r.identified);
  j.at("added").get_to(r.added);
  j.at("pruned_by_size").get_to(r.pruned_by_size);
  j.at("rejected_by_girth").get_to(r.rejected_by_girth);
  j.at("capped").get_to(r.capped);
  j.at("frontier").get_to(r.frontier);
  j.at("members").get_to(r.members);
}

ClosureReport summarize(const ClosureResult& r, const ClosureCaps& caps) {
  ClosureReport out;
  out.max_vertices = caps.max_vertices;
  out.max_configs = caps.max_configs;
  out.identified = r.identified;
  out.added = r.added;
  out.pruned_by_size = r.pruned_by_size;
  out.rejected_by_girth = r.rejected_by_girth;
  out.capped = r.capped;
  out.frontier = r.frontier;
  for (const ClosureMember& m : r.members) {
    out.members.push_back({m.config.name, m.stage, m.parent, m.config.order(), m.config.graph.size(),
                           m.contains_exceptions, std::nullopt});
  }
  return out;
}

void to_json(json& j, const Transfer& r) {
  j = {{"rule", r.rule}, {"face", r.face}, {"vertex", r.vertex}, {"amount", r.amount}};
}

void from_json(const json& j, Transfer& r) {
  j.at("rule").get_to(r.rule);
  j.at("face").get_to(r.face);
  j.at("vertex").get_to(r.vertex);
  j.at("amount").get_to(r.amount);
}

void to_json(json& j, const ChargeLedger& r) {
  j = {{"stage", r.stage}, {"vertex", r.vertex}, {"face", r.face}, {"log", r.log}};
}

void from_json(const json& j, ChargeLedger& r) {
  j.at("stage").get_to(r.stage);
  j.at("vertex").get_to(r.vertex);
  j.at("face").get_to(r.face);
  j.at("log").get_to(r.log);
}

void to_json(json& j, const Violation& r) {
  j = {{"kind", r.kind}, {"vertices", r.vertices}, {"detail", r.detail}};
}

void from_json(const json& j, Violation& r) {
  j.at("kind").get_to(r.kind);
  j.at("vertices").get_to(r.vertices);
  j.at("detail").get_to(r.detail);
}

void to_json(json& j, const Appearance& r) {
  j = {{"config", r.config}, {"image", r.image}};
}

void from_json(const json& j, Appearance& r) {
  j.at("config").get_to(r.config);
  j.at("image").get_to(r.image);
}

void to_json(json& j, const Element& r) {
  j = {{"kind", r.is_face ? "face" : "vertex"}, {"id", r.id}};
}

void from_json(const json& j, Element& r) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "face" && kind != "vertex") throw ValidationError("unknown element kind `" + kind + "`");
  r.is_face = kind == "face";
  j.at("id").get_to(r.id);
}

void to_json(json& j, const Explanation& r) {
  j = {{"element", r.element}, {"charge", r.charge}, {"appearances", r.appearances}, {"violations", r.violations}};
}

void from_json(const json& j, Explanation& r) {
  j.at("element").get_to(r.element);
  j.at("charge").get_to(r.charge);
  j.at("appearances").get_to(r.appearances);
  j.at("violations").get_to(r.violations);
}

void to_json(json& j, const AuditReport& r) {
  j = {{"ledger", r.ledger},
       {"initial_total", r.initial_total},
       {"final_total", r.final_total},
       {"needy", r.needy},
       {"bad", r.bad},
       {"violations", r.violations},
       {"appearances", r.appearances},
       {"negatives", r.negatives}};
}

void from_json(const json& j, AuditReport& r) {
  j.at("ledger").get_to(r.ledger);
  j.at("initial_total").get_to(r.initial_total);
  j.at("final_total").get_to(r.final_total);
  j.at("needy").get_to(r.needy);
  j.at("bad").get_to(r.bad);
  j.at("violations").get_to(r.violations);
  j.at("appearances").get_to(r.appearances);
  j.at("negatives").get_to(r.negatives);
}

void to_json(json& j, const DischargeReport& r) {
  j = {{"rotation", r.rotation},     {"outer_face", r.outer_face}, {"face_lengths", r.face_lengths},
       {"precolored", r.precolored}, {"identity", r.identity},     {"audit", r.audit}};
}

void from_json(const json& j, DischargeReport& r) {
  j.at("rotation").get_to(r.rotation);
  j.at("outer_face").get_to(r.outer_face);
  j.at("face_lengths").get_to(r.face_lengths);
  j.at("precolored").get_to(r.precolored);
  j.at("identity").get_to(r.identity);
  j.at("audit").get_to(r.audit);
}

void to_json(json& j, const SolveReport& r) {
  j = {{"graph", r.graph}, {"lists", r.lists}, {"rechecked", r.rechecked}};
  put(j, "seed", r.seed);
  put(j, "coloring", r.coloring);
}

void from_json(const json& j, SolveReport& r) {
  j.at("graph").get_to(r.graph);
  j.at("lists").get_to(r.lists);
  j.at("rechecked").get_to(r.rechecked);
  take(j, "seed", r.seed);
  take(j, "coloring", r.coloring);
}

}  // namespace injv
