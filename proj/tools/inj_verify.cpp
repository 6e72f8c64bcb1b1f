#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "injv/catalog.hpp"
#include "injv/choose.hpp"
#include "injv/discharge.hpp"
#include "injv/error.hpp"
#include "injv/graph_io.hpp"
#include "injv/planar.hpp"
#include "injv/report.hpp"

#ifndef INJV_DEFAULT_CATALOG
#define INJV_DEFAULT_CATALOG "catalog/paper.cfg"
#endif

using namespace injv;

namespace {

enum Exit { ok = 0, failed = 1, undecided = 2, usage = 3 };

std::size_t thread_count() {
  if (const char* env = std::getenv("INJ_VERIFY_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring INJ_VERIFY_THREADS=" << env << '\n';
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, n) on up to thread_count() workers.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard hold(error_lock);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << s << 's';
  return out.str();
}

struct Options {
  std::string report = "text";
  bool json() const { return report == "json"; }
};

// ---------------------------------------------------------------------------
// verify-catalog

struct VerifyCatalogArgs {
  std::string catalog = INJV_DEFAULT_CATALOG;
  std::vector<std::string> only;
  bool cross_check = false;
  bool search_exceptions = false;
  std::uint64_t oracle_nodes = 200'000'000;
};

std::string engine_summary(const VerifyReport& r) {
  std::vector<std::string> parts;
  if (r.greedy) parts.push_back(std::string("greedy ") + (r.greedy->choosable ? "yes" : "stuck"));
  if (r.alon_tarsi) parts.push_back(std::string("AT ") + (r.alon_tarsi->choosable ? "yes" : "no"));
  if (r.oracle) parts.push_back(std::string("oracle ") + (r.oracle->choosable ? "choosable" : "bad lists"));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

int cmd_verify_catalog(const Options& opt, const VerifyCatalogArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Configuration> all = read_catalog_file(args.catalog);
  std::vector<Configuration> chosen;
  for (const std::string& name : args.only) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Configuration& c) { return c.name == name; });
    if (it == all.end()) {
      std::cerr << "error: no record named " << name << " in " << args.catalog << '\n';
      return usage;
    }
    chosen.push_back(*it);
  }
  if (args.only.empty()) chosen = all;

  VerifyOptions options;
  options.cross_check = args.cross_check;
  options.search_exceptions = args.search_exceptions;
  options.oracle_limits.max_nodes = args.oracle_nodes;

  CatalogReport report;
  report.catalog = args.catalog;
  report.cross_check = args.cross_check;
  report.records.resize(chosen.size());
  parallel_for(chosen.size(), [&](std::size_t i) { report.records[i] = verify_configuration(chosen[i], options); });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failures = 0, capacity = 0;
  for (const VerifyReport& r : report.records) {
    if (r.passed) continue;
    if (r.note.rfind("capacity", 0) == 0) {
      ++capacity;
    } else {
      ++failures;
    }
  }
  if (opt.json()) {
    std::cout << emit(report) << '\n';
  } else {
    for (const VerifyReport& r : report.records) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  [" << to_string(r.label) << "]  ";
      std::cout << seconds_text(r.seconds);
      const std::string engines = engine_summary(r);
      if (!engines.empty()) std::cout << "  (" << engines << ")";
      if (!r.note.empty()) std::cout << "  " << r.note;
      std::cout << '\n';
    }
    std::cout << report.records.size() << " records, " << report.records.size() - failures - capacity << " passed, "
              << failures << " failed, " << capacity << " over capacity, "
              << seconds_text(report.seconds) << '\n';
  }
  if (failures > 0) return failed;
  return capacity > 0 ? undecided : ok;
}

// ---------------------------------------------------------------------------
// choosable

struct ChoosableArgs {
  std::string graph, sizes, method = "auto";
  bool injective = false;
  int max_vertices = 16;
  std::uint64_t max_nodes = 50'000'000;
};

// Replays whatever certificate the verdict carries. Returns false when there
// is none to replay.
bool recheck(const Graph& g, const SizeVector& f, const Verdict& v) {
  if (v.outcome == Outcome::choosable && v.certified_by == Method::greedy) {
    if (!is_valid_peel_order(g, f, v.greedy->order)) throw std::logic_error("peel order does not replay");
    return true;
  }
  if (v.outcome == Outcome::choosable && v.certified_by == Method::alon_tarsi) {
    const auto& d = *v.alon_tarsi->witness;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (d[x] < 0 || d[x] > f[x] - 1) throw std::logic_error("Alon-Tarsi witness exceeds a list size");
    }
    if (at_coefficient(g, d) == 0) throw std::logic_error("Alon-Tarsi witness has a zero coefficient");
    return true;
  }
  if (v.outcome == Outcome::not_choosable && v.oracle && v.oracle->bad_assignment) {
    const auto& lists = *v.oracle->bad_assignment;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (static_cast<int>(lists[x].size()) != f[x]) throw std::logic_error("bad assignment has a wrong list size");
    }
    if (list_color(g, lists)) throw std::logic_error("bad assignment is colorable");
    return true;
  }
  return false;
}

int cmd_choosable(const Options& opt, const ChoosableArgs& args) {
  const Graph input = read_graph_file(args.graph);
  const SizeVector f = read_sizes_file(args.sizes, input.order());
  const Method method = *parse_method(args.method);
  const Graph g = args.injective ? neighboring_graph(input) : input;
  ChoosableReport report;
  report.graph = args.graph;
  report.injective = args.injective;
  report.method = method;
  report.sizes = f;
  report.verdict = decide_choosable(g, f, method, OracleLimits{args.max_vertices, args.max_nodes});
  report.rechecked = recheck(g, f, report.verdict);
  const Verdict& v = report.verdict;

  if (opt.json()) {
    std::cout << emit(report) << '\n';
  } else {
    std::cout << "outcome: " << to_string(v.outcome) << " (" << to_string(v.certified_by) << ")\n";
    if (v.outcome == Outcome::choosable && v.certified_by == Method::greedy) {
      std::cout << "peel order: " << join(v.greedy->order) << '\n';
    } else if (v.outcome == Outcome::choosable && v.certified_by == Method::alon_tarsi) {
      std::cout << "witness d: " << join(*v.alon_tarsi->witness) << "  coefficient " << v.alon_tarsi->coefficient << '\n';
    } else if (v.outcome == Outcome::not_choosable && v.oracle->bad_assignment) {
      std::cout << "bad assignment:\n";
      write_lists(std::cout, *v.oracle->bad_assignment);
    }
    if (v.greedy && !v.greedy->choosable) std::cout << "greedy residual: " << join(v.greedy->residual) << '\n';
    if (v.oracle) std::cout << "oracle nodes: " << v.oracle->nodes << '\n';
    if (!v.note.empty()) std::cout << "note: " << v.note << '\n';
    if (report.rechecked) std::cout << "certificate re-checked\n";
  }
  switch (v.outcome) {
    case Outcome::choosable: return ok;
    case Outcome::undecided: return undecided;
    default: return failed;
  }
}

// ---------------------------------------------------------------------------
// square

int cmd_square(const std::string& path, const std::string& format, const std::string& output) {
  const Graph sq = neighboring_graph(read_graph_file(path));
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw ParseError("cannot write " + output, 0);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  if (format == "graph6") {
    out << to_graph6(sq) << '\n';
  } else {
    write_edge_list(out, sq);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// discharge

struct DischargeArgs {
  std::string rotation, precolored, catalog = INJV_DEFAULT_CATALOG;
  int outer = -1;
  bool ledger = false;
};

int cmd_discharge(const Options& opt, const DischargeArgs& args) {
  AuditInput a{read_rotation_file(args.rotation), {}};
  if (args.outer >= 0) a.pg.set_outer_face(args.outer);
  if (!args.precolored.empty()) a.precolored = read_precolored_file(args.precolored);
  const std::vector<Configuration> catalog = read_catalog_file(args.catalog);

  DischargeReport report;
  report.rotation = args.rotation;
  report.outer_face = a.pg.outer_face();
  for (const Face& f : a.pg.faces()) report.face_lengths.push_back(f.length());
  report.precolored = a.precolored;
  report.identity = total_charge_identity(a);
  report.audit = audit(a, catalog);
  const AuditReport& r = report.audit;
  const bool conserved = r.final_total == r.initial_total;

  if (opt.json()) {
    std::cout << emit(report) << '\n';
  } else {
    std::cout << "vertices " << a.pg.order() << ", edges " << a.pg.graph().size() << ", faces " << a.pg.faces().size()
              << ", outer face " << report.outer_face << " (length " << report.face_lengths[report.outer_face] << ")\n";
    std::cout << "initial total " << r.initial_total << ", final total " << r.final_total
              << (conserved ? " (conserved)" : " (NOT conserved)") << '\n';
    std::cout << "needy: " << join(r.needy) << "\nbad: " << join(r.bad) << '\n';
    std::cout << "transfers: " << r.ledger.log.size() << ", appearances: " << r.appearances.size()
              << ", violations: " << r.violations.size() << '\n';
    for (const Violation& v : r.violations) {
      std::cout << "  violation " << v.kind;
      if (!v.vertices.empty()) std::cout << " at " << join(v.vertices, ",");
      if (!v.detail.empty()) std::cout << ": " << v.detail;
      std::cout << '\n';
    }
    for (const Explanation& e : r.negatives) {
      std::cout << "  negative " << (e.element.is_face ? "face " : "vertex ") << e.element.id << " charge " << e.charge;
      if (!e.appearances.empty()) {
        std::cout << "  appearances:";
        for (auto i : e.appearances) std::cout << ' ' << r.appearances[i].config;
      }
      if (!e.violations.empty()) {
        std::cout << "  violations:";
        for (auto i : e.violations) std::cout << ' ' << r.violations[i].kind;
      }
      if (!e.explained()) std::cout << "  UNEXPLAINED";
      std::cout << '\n';
    }
    if (args.ledger) {
      for (const Transfer& t : r.ledger.log) {
        std::cout << "  R" << t.rule << ": face " << t.face << " -> vertex " << t.vertex << " amount " << t.amount << '\n';
      }
    }
  }
  return conserved && r.all_explained() ? ok : failed;
}

// ---------------------------------------------------------------------------
// closure

struct ClosureArgs {
  std::string catalog = INJV_DEFAULT_CATALOG;
  std::string caps;
  int max_vertices = 14;
  std::size_t max_configs = 50'000;
  std::vector<std::string> seeds;
  bool verify = false;
  bool list = false;
};

int cmd_closure(const Options& opt, ClosureArgs args) {
  if (!args.caps.empty()) {
    const auto comma = args.caps.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(args.caps);
      args.max_vertices = std::stoi(args.caps.substr(0, comma));
      args.max_configs = std::stoul(args.caps.substr(comma + 1));
    } catch (const std::exception&) {
      std::cerr << "error: --caps expects VERTICES,CONFIGS\n";
      return usage;
    }
  }
  if (args.max_vertices <= 0 || args.max_configs == 0) {
    std::cerr << "error: caps must be positive\n";
    return usage;
  }
  const std::vector<Configuration> catalog = read_catalog_file(args.catalog);
  std::vector<Configuration> seeds, exceptions;
  for (const Configuration& c : catalog) {
    if (c.label == Label::exception) exceptions.push_back(c);
    const bool named = std::find(args.seeds.begin(), args.seeds.end(), c.name) != args.seeds.end();
    if (args.seeds.empty() ? (c.label == Label::greedy || c.label == Label::alon_tarsi) : named) seeds.push_back(c);
  }
  if (seeds.size() < std::max<std::size_t>(args.seeds.size(), 1)) {
    std::cerr << "error: unknown seed name or empty seed set\n";
    return usage;
  }
  const ClosureCaps caps{args.max_vertices, args.max_configs};
  const ClosureResult result = generate_closure(seeds, caps, exceptions);
  ClosureReport report = summarize(result, caps);

  int failures = 0, capacity = 0;
  if (args.verify) {
    parallel_for(result.members.size(), [&](std::size_t i) {
      if (result.members[i].contains_exceptions.empty()) {
        report.members[i].verify = verify_configuration(result.members[i].config);
      }
    });
    for (const ClosureEntry& m : report.members) {
      if (!m.verify || m.verify->passed) continue;
      if (m.verify->note.rfind("capacity", 0) == 0) {
        ++capacity;
      } else {
        ++failures;
      }
    }
  }

  if (opt.json()) {
    std::cout << emit(report) << '\n';
  } else {
    std::size_t flagged = 0;
    for (const ClosureEntry& m : report.members) flagged += !m.contains_exceptions.empty();
    std::cout << "members " << report.members.size() << " (basic " << seeds.size() << ", identified "
              << report.identified << ", added " << report.added << ")\n";
    std::cout << "pruned by size " << report.pruned_by_size << ", rejected by girth " << report.rejected_by_girth
              << ", containing exceptions " << flagged << '\n';
    if (report.capped) std::cout << "CAPPED at " << report.max_configs << " members, frontier " << report.frontier << '\n';
    if (args.verify) {
      std::cout << "verified " << report.members.size() - flagged << ": " << failures << " failed, " << capacity
                << " over capacity\n";
    }
    for (const ClosureEntry& m : report.members) {
      const bool bad = m.verify && !m.verify->passed;
      if (!args.list && !bad) continue;
      std::cout << (bad ? "FAIL " : "     ") << m.name << "  [" << to_string(m.stage) << "] n=" << m.order
                << " m=" << m.size;
      if (!m.contains_exceptions.empty()) std::cout << "  contains " << m.contains_exceptions.front();
      if (bad) std::cout << "  " << m.verify->note;
      std::cout << '\n';
    }
  }
  if (failures > 0) return failed;
  return report.capped || capacity > 0 ? undecided : ok;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string graph, lists;
  std::optional<std::uint64_t> seed;
  int size = 5;
  int pool = 10;
};

ListAssignment random_lists(int n, int size, int pool, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> colors(pool);
  std::iota(colors.begin(), colors.end(), 0);
  ListAssignment lists(n);
  for (auto& l : lists) std::sample(colors.begin(), colors.end(), std::back_inserter(l), size, rng);
  return lists;
}

int cmd_solve(const Options& opt, const SolveArgs& args) {
  const Graph g = read_graph_file(args.graph);
  SolveReport report;
  report.graph = args.graph;
  if (!args.lists.empty()) {
    report.lists = read_lists_file(args.lists, g.order());
  } else {
    if (args.size <= 0 || args.pool < args.size) {
      std::cerr << "error: need 0 < --size <= --pool\n";
      return usage;
    }
    report.seed = args.seed ? *args.seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
    report.lists = random_lists(g.order(), args.size, args.pool, *report.seed);
  }
  const Graph sq = neighboring_graph(g);
  report.coloring = list_color(sq, report.lists);
  if (report.coloring) {
    if (!is_proper_list_coloring(sq, report.lists, *report.coloring)) {
      throw std::logic_error("solver returned an invalid coloring");
    }
    report.rechecked = true;
  }
  if (opt.json()) {
    std::cout << emit(report) << '\n';
  } else {
    if (report.seed) std::cout << "seed: " << *report.seed << '\n';
    if (report.coloring) {
      std::cout << "coloring: " << join(*report.coloring) << '\n';
    } else {
      std::cout << "none\n";
    }
  }
  return report.coloring ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Injective list-coloring verification toolkit"};
  app.name("inj-verify");
  app.require_subcommand(1);
  Options opt;
  app.add_option("--report", opt.report, "Report format")->check(CLI::IsMember({"text", "json"}));

  VerifyCatalogArgs vc;
  auto* verify = app.add_subcommand("verify-catalog", "Verify every catalog record by its labeled method");
  verify->add_option("--catalog", vc.catalog, "Catalog file")->check(CLI::ExistingFile);
  verify->add_option("--only", vc.only, "Verify only these records");
  verify->add_flag("--cross-check", vc.cross_check, "Also run the engines the label does not ask for");
  verify->add_flag("--search-exceptions", vc.search_exceptions, "Search bad assignments even when lists are shipped");
  verify->add_option("--oracle-max-nodes", vc.oracle_nodes, "Node budget of the oracle");

  ChoosableArgs ch;
  auto* choosable = app.add_subcommand("choosable", "Decide choosability of a graph from list sizes");
  choosable->add_option("graph", ch.graph, "Graph file (edge list or graph6)")->required()->check(CLI::ExistingFile);
  choosable->add_option("sizes", ch.sizes, "Size file with `v f` lines")->required()->check(CLI::ExistingFile);
  choosable->add_option("--method", ch.method, "greedy, at, oracle or auto")
      ->check(CLI::IsMember({"greedy", "at", "oracle", "auto"}));
  choosable->add_flag("--injective", ch.injective, "Color the neighboring graph instead");
  choosable->add_option("--max-vertices", ch.max_vertices, "Oracle vertex limit")->check(CLI::PositiveNumber);
  choosable->add_option("--max-nodes", ch.max_nodes, "Oracle node budget")->check(CLI::PositiveNumber);

  std::string sq_graph, sq_format = "edges", sq_output;
  auto* square = app.add_subcommand("square", "Write the neighboring graph");
  square->add_option("graph", sq_graph, "Graph file")->required()->check(CLI::ExistingFile);
  square->add_option("--format", sq_format, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));
  square->add_option("-o,--output", sq_output, "Output file (default stdout)");

  DischargeArgs dc;
  auto* discharge = app.add_subcommand("discharge", "Audit the discharging rules on a plane graph");
  discharge->add_option("--rotation", dc.rotation, "Rotation file")->required()->check(CLI::ExistingFile);
  discharge->add_option("--precolored", dc.precolored, "Precolored vertex file")->check(CLI::ExistingFile);
  discharge->add_option("--catalog", dc.catalog, "Catalog file")->check(CLI::ExistingFile);
  discharge->add_option("--outer", dc.outer, "Outer face id (default: the one in the file, else the longest)");
  discharge->add_flag("--ledger", dc.ledger, "Print every transfer");

  ClosureArgs cl;
  auto* closure = app.add_subcommand("closure", "Generate the closure of the catalog");
  closure->add_option("--catalog", cl.catalog, "Catalog file")->check(CLI::ExistingFile);
  closure->add_option("--caps", cl.caps, "VERTICES,CONFIGS");
  closure->add_option("--max-vertices", cl.max_vertices, "Vertex cap");
  closure->add_option("--max-configs", cl.max_configs, "Member cap");
  closure->add_option("--seed", cl.seeds, "Seed records (default: every G and AT record)");
  closure->add_flag("--verify", cl.verify, "Verify members that contain no exception");
  closure->add_flag("--list", cl.list, "List every member");

  SolveArgs sv;
  auto* solve = app.add_subcommand("solve", "Injectively list-color a graph");
  solve->add_option("graph", sv.graph, "Graph file")->required()->check(CLI::ExistingFile);
  solve->add_option("--lists", sv.lists, "Lists file with `v c1 c2 ...` lines")->check(CLI::ExistingFile);
  solve->add_option("--seed", sv.seed, "Seed for random lists");
  solve->add_option("--size", sv.size, "Random list size");
  solve->add_option("--pool", sv.pool, "Random color pool size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (verify->parsed()) return cmd_verify_catalog(opt, vc);
    if (choosable->parsed()) return cmd_choosable(opt, ch);
    if (square->parsed()) return cmd_square(sq_graph, sq_format, sq_output);
    if (discharge->parsed()) return cmd_discharge(opt, dc);
    if (closure->parsed()) return cmd_closure(opt, cl);
    if (solve->parsed()) return cmd_solve(opt, sv);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return undecided;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return failed;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failed;
  }
  return usage;
}
