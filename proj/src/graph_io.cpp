#include "injv/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "injv/error.hpp"

namespace injv {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_blank_or_comment(line)) return true;
    }
    return false;
  };
  if (!next_line()) return Graph(0);
  int n = 0, m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("expected header `n m`", line_no);
  }
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i), line_no);
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v)) throw ParseError("expected `u v`", line_no);
    try {
      if (!g.add_edge(u, v)) throw ParseError("duplicate edge", line_no);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::size_t pos = 0;
  auto byte = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6 string truncated", 0);
    int b = static_cast<unsigned char>(text[pos++]) - 63;
    if (b < 0 || b > 63) throw ParseError("invalid graph6 character", 0);
    return b;
  };
  long n = byte();
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte();
    if (n >= 258048) throw ParseError("graph6 graphs with n >= 258048 are not supported", 0);
  }
  Graph g(static_cast<int>(n));
  int bits_left = 0, current = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits_left == 0) {
        current = byte();
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1) g.add_edge(u, v);
    }
  }
  if (pos != text.size()) throw ParseError("trailing characters after graph6 data", 0);
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int current = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      current = (current << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(current + 63));
        current = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
  return out;
}

Graph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream scan(text);
  std::string line;
  while (std::getline(scan, line)) {
    if (is_blank_or_comment(line)) continue;
    std::istringstream tokens(line);
    std::string first, second;
    tokens >> first >> second;
    const bool numeric = !first.empty() && std::isdigit(static_cast<unsigned char>(first[0]));
    if (second.empty() && !numeric) return parse_graph6(first);
    break;
  }
  std::istringstream again(text);
  return parse_edge_list(again);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_graph(in);
}

}  // namespace injv
