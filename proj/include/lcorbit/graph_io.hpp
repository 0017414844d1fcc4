// Copyright 2026 The lcorbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graph6 and edge-list text formats for LabelledGraph.

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

namespace detail {

constexpr int kGraph6Offset = 63;

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline int graph6_value(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c) - kGraph6Offset;
  if (v < 0 || v > 63) {
    throw ParseError("graph6: byte " + std::to_string(pos) + " ('" + std::string(1, c) +
                     "') outside the printable range 63..126");
  }
  return v;
}

}  // namespace detail

// Standard graph6: size header N(n), then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into big-endian 6-bit chunks,
// each offset by 63. An optional ">>graph6<<" prefix is accepted.
inline LabelledGraph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(detail::graph6_value(text[0], 0));
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && text[1] == '~';
    const std::size_t start = wide ? 2 : 1;
    const std::size_t digits = wide ? 6 : 3;
    if (text.size() < start + digits) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 0; i < digits; ++i) {
      n = (n << 6) | static_cast<std::uint64_t>(detail::graph6_value(text[start + i], start + i));
    }
    pos = start + digits;
  }
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6: vertex count " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chunks = (bits + 5) / 6;
  if (text.size() - pos != chunks) {
    throw ParseError("graph6: expected " + std::to_string(chunks) + " adjacency bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }

  LabelledGraph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const int chunk = detail::graph6_value(text[pos + k / 6], pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    const int chunk = detail::graph6_value(text[pos + k / 6], pos + k / 6);
    const int padding_mask = (1 << (6 - k % 6)) - 1;
    if (chunk & padding_mask) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

inline std::string to_graph6(const LabelledGraph& g) {
  const std::uint64_t n = g.size();
  std::string out;
  auto put = [&out](std::uint64_t v) { out.push_back(static_cast<char>(v + detail::kGraph6Offset)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63u);
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63u);
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        put(static_cast<std::uint64_t>(chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(static_cast<std::uint64_t>(chunk << (6 - filled)));
  return out;
}

// Edge list: a header line "n" or "n m", then whitespace-separated pairs
// "u v" with 0-based vertices. When m is given the pair count must match.
// '#' starts a comment that runs to end of line.
inline LabelledGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(current);
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    lines.push_back(current);
  }
  std::vector<std::vector<long long>> rows;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string line = lines[li];
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<long long> values;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("edge list line " + std::to_string(li + 1) + ": invalid integer '" + token + "'");
      }
      values.push_back(value);
    }
    if (!values.empty()) rows.push_back(std::move(values));
  }
  if (rows.empty()) throw ParseError("edge list: missing vertex-count header");
  const auto& header = rows.front();
  if (header.size() > 2 || header[0] < 0) throw ParseError("edge list: header must be \"n\" or \"n m\"");
  const auto n = static_cast<std::size_t>(header[0]);
  LabelledGraph g(n);
  std::size_t pairs = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() % 2 != 0) throw ParseError("edge list: odd number of endpoints on an edge line");
    for (std::size_t i = 0; i < row.size(); i += 2) {
      const long long u = row[i];
      const long long v = row[i + 1];
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw ParseError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") outside [0," + std::to_string(n) + ")");
      }
      if (u == v) throw ParseError("edge list: self-loop at " + std::to_string(u));
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++pairs;
    }
  }
  if (header.size() == 2 && static_cast<std::size_t>(header[1]) != pairs) {
    throw ParseError("edge list: header announces " + std::to_string(header[1]) + " edges, found " +
                     std::to_string(pairs));
  }
  return g;
}

inline std::string to_edge_list(const LabelledGraph& g) {
  const auto es = g.edges();
  std::string out = std::to_string(g.size()) + " " + std::to_string(es.size()) + "\n";
  for (const auto& e : es) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace lcorbit
