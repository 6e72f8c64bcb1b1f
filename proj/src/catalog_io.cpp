#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "injv/catalog.hpp"
#include "injv/error.hpp"

namespace injv {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int to_int(const std::string& token, const std::string& what, int line) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used == token.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError("expected " + what + ", got `" + token + "`", line);
}

struct Pending {
  Configuration config;
  std::map<std::string, Vertex> ids;
  std::vector<std::pair<Vertex, int>> sizes;  // declared sizes, -1 when omitted
  std::vector<std::pair<std::string, int>> edges;
  struct Labeled {
    std::string head;
    std::string body;
    int line;
  };
  std::vector<Labeled> faces, cuts, lists;
  int start_line = 0;
};

Vertex lookup(const Pending& p, const std::string& name, int line) {
  auto it = p.ids.find(name);
  if (it == p.ids.end()) throw ParseError("unknown vertex `" + name + "`", line);
  return it->second;
}

Edge parse_edge(const Pending& p, const std::string& token, int line) {
  const auto dash = token.find('-');
  if (dash == std::string::npos) throw ParseError("expected an edge `a-b`, got `" + token + "`", line);
  Vertex a = lookup(p, token.substr(0, dash), line);
  Vertex b = lookup(p, token.substr(dash + 1), line);
  if (a == b) throw ParseError("loop `" + token + "`", line);
  return {std::min(a, b), std::max(a, b)};
}

// Splits "head: rest" into its two parts.
std::pair<std::string, std::string> split_colon(const std::string& text, int line) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("expected `label: ...`", line);
  return {trim(text.substr(0, colon)), trim(text.substr(colon + 1))};
}

Configuration finish(Pending& p) {
  Configuration& c = p.config;
  const int n = static_cast<int>(p.ids.size());
  c.graph = Graph(n);
  for (const auto& [token, line] : p.edges) {
    auto [a, b] = parse_edge(p, token, line);
    if (!c.graph.add_edge(a, b)) throw ParseError("duplicate edge `" + token + "`", line);
  }
  bool any_omitted = false;
  c.declared_sizes.assign(n, 0);
  for (auto [v, s] : p.sizes) {
    if (s < 0) any_omitted = true;
    c.declared_sizes[v] = s;
  }
  if (any_omitted) {
    const SizeVector derived = external_list_sizes(c);
    for (auto [v, s] : p.sizes) {
      if (s < 0) c.declared_sizes[v] = derived[v];
    }
  }
  for (const auto& f : p.faces) {
    FaceLabel label;
    label.length = to_int(f.head, "a face length", f.line);
    std::istringstream names(f.body);
    std::string name;
    while (names >> name) label.cycle.push_back(lookup(p, name, f.line));
    c.faces.push_back(std::move(label));
  }
  for (const auto& k : p.cuts) {
    EdgeCut cut;
    cut.label = k.head;
    std::istringstream tokens(k.body);
    std::string token;
    while (tokens >> token) cut.edges.push_back(parse_edge(p, token, k.line));
    c.cuts.push_back(std::move(cut));
  }
  if (!p.lists.empty()) {
    ListAssignment lists(n);
    std::vector<char> given(n, 0);
    for (const auto& l : p.lists) {
      Vertex v = lookup(p, l.head, l.line);
      if (given[v]) throw ParseError("second list for `" + l.head + "`", l.line);
      given[v] = 1;
      std::istringstream tokens(l.body);
      std::string token;
      while (tokens >> token) lists[v].push_back(to_int(token, "a color", l.line));
      std::sort(lists[v].begin(), lists[v].end());
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!given[v]) throw ParseError(c.name + ": no list for `" + c.vertex_names[v] + "`", p.start_line);
    }
    c.bad_assignment = std::move(lists);
  }
  try {
    validate(c);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), p.start_line);
  }
  return c;
}

}  // namespace

std::vector<Configuration> parse_catalog(std::istream& in) {
  std::vector<Configuration> out;
  std::set<std::string> names;
  std::optional<Pending> current;
  std::string raw;
  int line_no = 0;
  bool method_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string keyword;
    row >> keyword;
    std::string rest;
    std::getline(row, rest);
    rest = trim(rest);

    if (keyword == "config") {
      if (current) throw ParseError("`config` inside an open record", line_no);
      if (rest.empty() || rest.find(' ') != std::string::npos) throw ParseError("expected `config NAME`", line_no);
      if (!names.insert(rest).second) throw ParseError("duplicate record name `" + rest + "`", line_no);
      current.emplace();
      current->config.name = rest;
      current->start_line = line_no;
      method_seen = false;
      continue;
    }
    if (!current) throw ParseError("`" + keyword + "` outside a record", line_no);
    Pending& p = *current;
    Configuration& c = p.config;
    if (keyword == "end") {
      if (!method_seen) throw ParseError(c.name + ": missing `method`", line_no);
      out.push_back(finish(p));
      current.reset();
    } else if (keyword == "group") {
      c.group = rest;
    } else if (keyword == "method") {
      auto label = parse_label(rest);
      if (!label) throw ParseError("unknown method `" + rest + "`", line_no);
      c.label = *label;
      method_seen = true;
    } else if (keyword == "vertex") {
      std::istringstream tokens(rest);
      std::string name, md_text, extra;
      if (!(tokens >> name >> md_text)) throw ParseError("expected `vertex NAME MD [SIZE] [precolored]`", line_no);
      if (p.ids.count(name)) throw ParseError("duplicate vertex `" + name + "`", line_no);
      const Vertex v = static_cast<Vertex>(p.ids.size());
      p.ids.emplace(name, v);
      c.vertex_names.push_back(name);
      c.md.push_back(to_int(md_text, "an md value", line_no));
      int size = -1;
      char pre = 0;
      while (tokens >> extra) {
        if (extra == "precolored") {
          pre = 1;
        } else if (size < 0) {
          size = to_int(extra, "a list size", line_no);
        } else {
          throw ParseError("unexpected `" + extra + "`", line_no);
        }
      }
      c.precolored.push_back(pre);
      p.sizes.emplace_back(v, size);
    } else if (keyword == "edges") {
      std::istringstream tokens(rest);
      std::string token;
      while (tokens >> token) p.edges.emplace_back(token, line_no);
    } else if (keyword == "face" || keyword == "cut" || keyword == "list") {
      auto [head, body] = split_colon(rest, line_no);
      auto& bucket = keyword == "face" ? p.faces : keyword == "cut" ? p.cuts : p.lists;
      bucket.push_back({head, body, line_no});
    } else if (keyword == "provenance") {
      c.provenance.push_back(rest);
    } else {
      throw ParseError("unknown keyword `" + keyword + "`", line_no);
    }
  }
  if (current) throw ParseError(current->config.name + ": missing `end`", line_no);
  return out;
}

std::vector<Configuration> read_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_catalog(in);
}

void write_configuration(std::ostream& out, const Configuration& c) {
  auto edge_text = [&](Edge e) { return c.vertex_name(e.first) + "-" + c.vertex_name(e.second); };
  out << "config " << c.name << '\n';
  if (!c.group.empty()) out << "group " << c.group << '\n';
  out << "method " << to_string(c.label) << '\n';
  for (Vertex v = 0; v < c.order(); ++v) {
    out << "vertex " << c.vertex_name(v) << ' ' << c.md[v] << ' ' << c.declared_sizes[v];
    if (c.precolored[v]) out << " precolored";
    out << '\n';
  }
  const auto edges = c.graph.edges();
  for (std::size_t i = 0; i < edges.size(); i += 8) {
    out << "edges";
    for (std::size_t j = i; j < std::min(edges.size(), i + 8); ++j) out << ' ' << edge_text(edges[j]);
    out << '\n';
  }
  for (const FaceLabel& f : c.faces) {
    out << "face " << f.length << ':';
    for (Vertex v : f.cycle) out << ' ' << c.vertex_name(v);
    out << '\n';
  }
  for (const EdgeCut& cut : c.cuts) {
    out << "cut " << cut.label << ':';
    for (Edge e : cut.edges) out << ' ' << edge_text(e);
    out << '\n';
  }
  if (c.bad_assignment) {
    for (Vertex v = 0; v < c.order(); ++v) {
      out << "list " << c.vertex_name(v) << ':';
      for (int color : (*c.bad_assignment)[v]) out << ' ' << color;
      out << '\n';
    }
  }
  for (const std::string& note : c.provenance) out << "provenance " << note << '\n';
  out << "end\n";
}

void write_catalog(std::ostream& out, std::span<const Configuration> catalog) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i > 0) out << '\n';
    write_configuration(out, catalog[i]);
  }
}

}  // namespace injv
