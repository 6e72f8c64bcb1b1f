#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "injv/choose.hpp"
#include "injv/error.hpp"

namespace injv {

namespace {

// Calls `row(tokens, line)` for every non-blank line with comments removed.
template <typename Row>
void for_each_row(std::istream& in, Row&& row) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<long long> values;
    std::string token;
    while (tokens >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got `" + token + "`", line);
      }
    }
    if (!values.empty()) row(values, line);
  }
}

Vertex vertex_of(long long v, int n, std::vector<char>& seen, int line) {
  if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", line);
  if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice", line);
  seen[v] = 1;
  return static_cast<Vertex>(v);
}

void require_all(const std::vector<char>& seen) {
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw ParseError("vertex " + std::to_string(v) + " is missing", 0);
  }
}

}  // namespace

SizeVector parse_sizes(std::istream& in, int n) {
  SizeVector f(n, 0);
  std::vector<char> seen(n, 0);
  for_each_row(in, [&](const std::vector<long long>& row, int line) {
    if (row.size() != 2) throw ParseError("expected `v f`", line);
    const Vertex v = vertex_of(row[0], n, seen, line);
    if (row[1] < 0 || row[1] > 1000) throw ParseError("list size out of range", line);
    f[v] = static_cast<int>(row[1]);
  });
  require_all(seen);
  return f;
}

ListAssignment parse_lists(std::istream& in, int n) {
  ListAssignment lists(n);
  std::vector<char> seen(n, 0);
  for_each_row(in, [&](const std::vector<long long>& row, int line) {
    const Vertex v = vertex_of(row[0], n, seen, line);
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i] < 0 || row[i] > 1'000'000) throw ParseError("color out of range", line);
      lists[v].push_back(static_cast<int>(row[i]));
    }
    std::sort(lists[v].begin(), lists[v].end());
    if (std::adjacent_find(lists[v].begin(), lists[v].end()) != lists[v].end()) {
      throw ParseError("repeated color in the list of vertex " + std::to_string(v), line);
    }
  });
  require_all(seen);
  return lists;
}

SizeVector read_sizes_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_sizes(in, n);
}

ListAssignment read_lists_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_lists(in, n);
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    out << v;
    for (int c : lists[v]) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace injv
