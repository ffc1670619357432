#include "cpa/edge_list.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "cpa/error.hpp"

namespace cpa {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

WeightedGraph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<WeightedEdge> edges;
  std::set<Edge> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!n) {
      std::size_t count = 0;
      if (fields.size() != 2 || fields[0] != "n" || !parse_number(fields[1], count)) {
        throw ParseError(line_no, "expected header 'n <vertex count>'");
      }
      if (count == 0) throw ParseError(line_no, "vertex count must be positive");
      n = count;
      continue;
    }
    if (fields.size() != 3) throw ParseError(line_no, "expected 'u v w'");
    Vertex u = 0, v = 0;
    double w = 0.0;
    if (!parse_number(fields[0], u) || !parse_number(fields[1], v)) {
      throw ParseError(line_no, "vertex ids must be non-negative integers");
    }
    if (!parse_number(fields[2], w) || !std::isfinite(w)) {
      throw ParseError(line_no, "weight must be a finite decimal number");
    }
    if (u >= *n || v >= *n) throw ParseError(line_no, "vertex id out of range for n = " + std::to_string(*n));
    if (u == v) throw ParseError(line_no, "loops are not allowed");
    if (!seen.insert(Edge(u, v)).second) throw ParseError(line_no, "repeated edge");
    edges.push_back({u, v, w});
  }
  if (!n) throw ParseError(line_no, "missing header 'n <vertex count>'");
  return WeightedGraph(*n, std::move(edges));
}

WeightedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

WeightedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_edge_list(in);
}

std::string format_edge_list(const WeightedGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  char buf[64];
  for (const auto& e : g.edges()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.w);
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::string(buf, ptr) + "\n";
  }
  return out;
}

}  // namespace cpa
