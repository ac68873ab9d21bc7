#pragma once

// Edge-list CSV: one `src,dst[,timestamp]` record per line. Node labels are
// arbitrary strings, mapped to dense ids in order of first appearance. A
// first line whose first two fields are `src` and `dst` (any case) is a
// header. Blank lines and lines starting with '#' are ignored.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/split.hpp"

namespace linkpred {

struct EdgeList {
  /// labels[id] is the input label of node id.
  std::vector<std::string> labels;
  std::vector<TimedEdge> edges;
  bool has_timestamps = false;

  std::size_t node_count() const noexcept { return labels.size(); }

  std::vector<NodePair> pairs() const {
    std::vector<NodePair> out;
    out.reserve(edges.size());
    for (const TimedEdge& e : edges) out.push_back(e.pair);
    return out;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace detail

inline EdgeList read_edge_list(std::istream& in) {
  EdgeList out;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  std::size_t records = 0;
  std::size_t timestamped = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = detail::split_fields(text);
    const bool header = first_record && fields.size() >= 2 && detail::iequals(fields[0], "src") &&
                        detail::iequals(fields[1], "dst");
    first_record = false;
    if (header) continue;
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
      detail::fail(ErrorKind::kMalformedInput,
                   "line " + std::to_string(line_no) + ": expected src,dst[,timestamp]");
    }
    TimedEdge e;
    e.pair = {intern(fields[0]), intern(fields[1])};
    if (fields.size() == 3) {
      const std::string_view ts = fields[2];
      const auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), e.timestamp);
      if (ec != std::errc() || ptr != ts.data() + ts.size()) {
        detail::fail(ErrorKind::kMalformedInput,
                     "line " + std::to_string(line_no) + ": bad timestamp '" + std::string(ts) + "'");
      }
      ++timestamped;
    }
    out.edges.push_back(e);
    ++records;
  }
  if (timestamped != 0 && timestamped != records) {
    detail::fail(ErrorKind::kMalformedInput, "timestamp column present on only some lines");
  }
  out.has_timestamps = records > 0 && timestamped == records;
  return out;
}

inline EdgeList read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::kMalformedInput, "cannot open edge list " + path);
  return read_edge_list(in);
}

inline Graph build_graph(const EdgeList& list, SelfLoopPolicy policy, BuildStats& stats) {
  const auto pairs = list.pairs();
  return build_graph(pairs, list.node_count(), policy, stats);
}

/// Writes `src,dst` followed by each edge in canonical ascending order.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << "src,dst\n";
  for (const NodePair& e : g.edges()) out << e.u << ',' << e.v << '\n';
}

}  // namespace linkpred
