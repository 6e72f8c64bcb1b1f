#include <algorithm>

#include "doctest.h"
#include "injv/error.hpp"
#include "injv/report.hpp"
#include "support/oracles.hpp"

using namespace injv;

namespace {

const std::vector<Configuration>& catalog() {
  static const std::vector<Configuration> all = read_catalog_file(INJV_CATALOG);
  return all;
}

template <typename T>
void round_trips(const T& r) {
  const std::string text = emit(r);
  CHECK(parse_report<T>(text) == r);
  CHECK(emit(parse_report<T>(text)) == text);
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("catalog reports round trip") {
  VerifyOptions o;
  o.cross_check = true;
  CatalogReport r{INJV_CATALOG, true, {}, 0.25};
  for (const Configuration& c : catalog()) r.records.push_back(verify_configuration(c, o));
  VerifyOptions search;
  search.search_exceptions = true;
  for (const Configuration& c : catalog()) {
    if (c.label == Label::exception) r.records.push_back(verify_configuration(c, search));
  }
  round_trips(r);
  const json j = json::parse(emit(r));
  CHECK(j.at("records").size() == r.records.size());
  CHECK(j.at("records")[0].at("label").is_string());
}

TEST_CASE("choosable reports round trip for every method and outcome") {
  const Graph g = cycle(4);
  for (Method m : {Method::greedy, Method::alon_tarsi, Method::oracle, Method::automatic}) {
    for (int f : {1, 2, 3}) {
      const SizeVector sizes(4, f);
      ChoosableReport r{"c4.edges", false, m, sizes, decide_choosable(g, sizes, m), true};
      round_trips(r);
    }
  }
  const SizeVector twos(9, 2);
  ChoosableReport undecided{"c9", true, Method::oracle, twos, injective_choosable(cycle(9), twos, Method::oracle, {4, 1000}),
                            false};
  CHECK(undecided.verdict.outcome == Outcome::undecided);
  round_trips(undecided);
}

TEST_CASE("closure reports round trip") {
  std::vector<Configuration> seeds{catalog()[0], catalog()[1]};
  const ClosureCaps caps{12, 30};
  ClosureReport r = summarize(generate_closure(seeds, caps), caps);
  REQUIRE(r.members.size() >= 2);
  r.members[0].verify = verify_configuration(seeds[0]);
  round_trips(r);
}

TEST_CASE("discharge reports round trip") {
  const AuditInput a{oracle::theta(2, 4, 5), {}};
  const AuditReport audit_report = audit(a, catalog());
  std::vector<int> lengths;
  for (const Face& f : a.pg.faces()) lengths.push_back(f.length());
  DischargeReport r{"theta.rot", a.pg.outer_face(), lengths, {}, total_charge_identity(a), audit_report};
  round_trips(r);

  const AuditInput bad{oracle::theta(2, 3, 4), {}};
  DischargeReport v{"bad.rot", bad.pg.outer_face(), {}, {}, -11, audit(bad, catalog())};
  CHECK_FALSE(v.audit.violations.empty());
  round_trips(v);
}

TEST_CASE("solve reports round trip with and without a coloring") {
  ListAssignment lists{{1, 2}, {2, 3}, {1, 3}};
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  SolveReport found{"p3", 42, lists, list_color(neighboring_graph(p3), lists), true};
  REQUIRE(found.coloring);
  round_trips(found);
  SolveReport none{"p3", std::nullopt, {{1}, {2}, {1}}, std::nullopt, false};
  round_trips(none);
  CHECK(json::parse(emit(none)).at("coloring").is_null());
}

TEST_CASE("malformed report text is rejected") {
  CHECK_THROWS(parse_report<SolveReport>("{"));
  json j = json::parse(emit(VerifyReport{}));
  j["label"] = "nonsense";
  CHECK_THROWS_AS(parse_report<VerifyReport>(j.dump()), ValidationError);
  json e = {{"kind", "edge"}, {"id", 0}};
  CHECK_THROWS_AS(e.get<Element>(), ValidationError);
}
