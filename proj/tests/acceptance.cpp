// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "injv/catalog.hpp"
#include "injv/choose.hpp"
#include "injv/discharge.hpp"
#include "support/oracles.hpp"

using namespace injv;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << ": " << detail << std::endl;
}

std::string secs(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

const std::vector<std::string> basic{"C_2_1", "C_2_2", "C_7_1", "C_7_2", "C_7_3", "C_7_4", "C_7_5", "C_8_1",
                                     "C_8_2", "C_8_3", "C_8_4", "C_8_5", "C_8_6", "C_8_7", "C_8_8", "C_8_9",
                                     "C_9_1", "C_9_2", "C_9_3", "C_9_4", "C_10_1", "C_10_2", "C_10_3"};

const Configuration* find(const std::vector<Configuration>& all, const std::string& name) {
  for (const auto& c : all) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void catalog_reproduction(const std::vector<Configuration>& all) {
  const auto t0 = Clock::now();
  std::vector<std::string> failed;
  int present = 0;
  for (const auto& name : basic) {
    const Configuration* c = find(all, name);
    if (!c) {
      failed.push_back(name + "(missing)");
      continue;
    }
    ++present;
    const VerifyReport r = verify_configuration(*c);
    if (!r.passed) failed.push_back(name + "[" + std::string(to_string(r.label)) + "]");
  }
  const double t = since(t0);
  std::string detail = std::to_string(present - static_cast<int>(failed.size())) + "/23 verified by label in " + secs(t);
  if (!failed.empty()) {
    detail += "; failed:";
    for (const auto& f : failed) detail += " " + f;
  }
  report(1, "catalog reproduction", failed.empty() && present == 23 && t < 600, detail);
}

void exception_reproduction(const std::vector<Configuration>& all) {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (const char* name : {"X_1", "X_2"}) {
    const Configuration* c = find(all, name);
    if (!c || !c->bad_assignment) {
      ok = false;
      detail += std::string(name) + " has no shipped lists; ";
      continue;
    }
    const VerifyReport r = verify_configuration(*c);
    const bool sizes_match = [&] {
      for (Vertex v = 0; v < c->order(); ++v) {
        if (static_cast<int>((*c->bad_assignment)[v].size()) != c->declared_sizes[v]) return false;
      }
      return true;
    }();
    const bool uncolorable = !list_color(neighboring_graph(c->graph), *c->bad_assignment).has_value();
    ok = ok && r.passed && sizes_match && uncolorable;
    detail += std::string(name) + (r.passed && sizes_match && uncolorable ? " bad lists confirmed; " : " not confirmed; ");
  }
  const double t = since(t0);
  ok = ok && t < 60;
  report(2, "exception reproduction", ok, detail + "re-verified in " + secs(t));
}

void engine_soundness() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(1, 7), size(1, 3);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  int greedy_true = 0, at_true = 0, violations = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    SizeVector f(g.order());
    for (int& x : f) x = size(rng);
    const bool truth = oracle_choosable(g, f, {16, 500'000'000}).choosable;
    const bool greedy = greedy_choosable(g, f).choosable;
    const bool at = at_choosable(g, f).choosable;
    greedy_true += greedy;
    at_true += at;
    if ((greedy && !truth) || (at && !truth)) ++violations;
  }
  report(3, "engine soundness", violations == 0,
         "500 graphs, " + std::to_string(greedy_true) + " greedy-true, " + std::to_string(at_true) + " AT-true, " +
             std::to_string(violations) + " violations");
}

void enumerate(const Graph& g, std::vector<int>& d, int v, int left, std::vector<std::vector<int>>& out) {
  if (v == g.order()) {
    if (left == 0) out.push_back(d);
    return;
  }
  for (int x = 0; x <= std::min(left, g.degree(v)); ++x) {
    d[v] = x;
    enumerate(g, d, v + 1, left - x, out);
  }
  d[v] = 0;
}

void coefficient_cross_validation() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> order(2, 7);
  int graphs = 0, vectors = 0, mismatches = 0;
  while (graphs < 200) {
    const Graph g = oracle::random_graph(rng, order(rng), 0.5);
    if (g.size() > 10) continue;
    ++graphs;
    std::vector<int> d(g.order(), 0);
    std::vector<std::vector<int>> all;
    enumerate(g, d, 0, g.size(), all);
    for (const auto& e : all) {
      ++vectors;
      if (at_coefficient(g, e) != oracle::eulerian_coefficient(g, e)) ++mismatches;
    }
  }
  report(4, "coefficient cross-validation", mismatches == 0,
         std::to_string(graphs) + " graphs, " + std::to_string(vectors) + " exponent vectors, " +
             std::to_string(mismatches) + " mismatches");
}

void discharging_identities(const std::vector<Configuration>& all) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(INJV_SAMPLES)) {
    if (e.path().extension() == ".rot") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> bad;
  int checked = 0;
  for (const auto& path : files) {
    const AuditInput a{read_rotation_file(path.string()), {}};
    const Graph& g = a.pg.graph();
    const auto gi = girth(g);
    if (g.max_degree() > 3 || (gi && *gi < 6)) {
      bad.push_back(path.stem().string() + "(not subcubic girth 6)");
      continue;
    }
    ++checked;
    const AuditReport r = audit(a, all);
    bool ok = total_charge_identity(a) == -11 && r.initial_total == -11 && r.final_total == r.initial_total &&
              r.ledger.total(5) == r.ledger.total(0) && r.all_explained();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3 && r.ledger.vertex[5][v] != 0) ok = false;
    }
    for (const Face& f : a.pg.faces()) {
      if (f.id != a.pg.outer_face() && f.length() == 6 && r.ledger.face[5][f.id] != 0) ok = false;
    }
    if (!ok) bad.push_back(path.stem().string());
  }
  std::string detail = std::to_string(checked) + " samples";
  for (const auto& b : bad) detail += " " + b;
  report(5, "discharging identities", bad.empty() && checked >= 10, detail);
}

void five_list_smoke_test() {
  int patches = 0, runs = 0, colored = 0;
  for (int rows = 2; rows <= 6; ++rows) {
    for (int cols = 3; cols <= 8; ++cols) {
      const PlaneGraph pg = oracle::hex_patch(rows, cols);
      if (pg.order() == 0 || pg.order() > 30) continue;
      ++patches;
      const Graph sq = neighboring_graph(pg.graph());
      std::mt19937_64 rng(1000 * rows + cols);
      std::vector<int> pool(10);
      for (int c = 0; c < 10; ++c) pool[c] = c;
      for (int s = 0; s < 50; ++s) {
        ListAssignment lists(pg.order());
        for (auto& l : lists) {
          std::sample(pool.begin(), pool.end(), std::back_inserter(l), 5, rng);
        }
        ++runs;
        const auto phi = list_color(sq, lists);
        if (phi && oracle::injective_ok(pg.graph(), lists, *phi)) ++colored;
      }
    }
  }
  report(6, "hex patch 5-list smoke test", patches > 0 && colored == runs,
         std::to_string(patches) + " patches, " + std::to_string(colored) + "/" + std::to_string(runs) +
             " assignments colored and validated");
}

}  // namespace

int main() {
  const auto all = read_catalog_file(INJV_CATALOG);
  catalog_reproduction(all);
  exception_reproduction(all);
  engine_soundness();
  coefficient_cross_validation();
  discharging_identities(all);
  five_list_smoke_test();
  return failures == 0 ? 0 : 1;
}
