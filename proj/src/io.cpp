// Copyright 2026 The treespan Authors
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

#include "treespan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <iterator>
#include <set>
#include <vector>

namespace treespan {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return tokens;
}

std::int64_t parse_int(const Token& tok, int line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(std::string("expected integer ") + what + ", got '" +
                         std::string(tok.text) + "'",
                     line, tok.column);
  }
  return value;
}

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t pos = 0;
  int last_line = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    last_line = line_no;
    if (tokens.size() != 2) {
      throw ParseError(have_header ? "edge line must contain exactly two vertices"
                                   : "header must be 'n m'",
                       line_no, tokens.front().column);
    }
    if (!have_header) {
      n = parse_int(tokens[0], line_no, "vertex count");
      m = parse_int(tokens[1], line_no, "edge count");
      if (n < 1) throw ParseError("vertex count must be positive", line_no, tokens[0].column);
      if (m < 0 || m > n * (n - 1) / 2) {
        throw ParseError("edge count out of range for a simple graph", line_no, tokens[1].column);
      }
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
    } else {
      if (static_cast<std::int64_t>(edges.size()) == m) {
        throw ParseError("more edge lines than declared in header", line_no, tokens[0].column);
      }
      std::int64_t a = parse_int(tokens[0], line_no, "vertex");
      std::int64_t b = parse_int(tokens[1], line_no, "vertex");
      for (int k = 0; k < 2; ++k) {
        std::int64_t x = k == 0 ? a : b;
        if (x < 0 || x >= n) {
          throw ParseError("vertex index " + std::to_string(x) + " not in 0.." +
                               std::to_string(n - 1),
                           line_no, tokens[k].column);
        }
      }
      if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no, tokens[0].column);
      Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      if (!seen.insert(e).second) {
        throw ParseError("duplicate edge " + to_string(e), line_no, tokens[0].column);
      }
      edges.push_back(e);
    }
    if (nl == text.size()) break;
  }
  if (!have_header) throw ParseError("missing header 'n m'", std::max(line_no, 1), 1);
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given",
                     last_line, 1);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph6(std::string_view text) {
  // Single line; trim surrounding whitespace and an optional header.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  std::size_t offset = 0;
  while (offset < text.size() && text[offset] == ' ') ++offset;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(offset, kHeader.size()) == kHeader) offset += kHeader.size();
  std::string_view body = text.substr(offset);
  if (body.find('\n') != std::string_view::npos) {
    throw ParseError("graph6 input must be a single graph on one line", 2, 1);
  }
  std::size_t i = 0;
  auto next = [&](const char* what) -> int {
    if (i >= body.size()) {
      throw ParseError(std::string("truncated graph6 ") + what, 1, static_cast<int>(offset + i) + 1);
    }
    int c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) {
      throw ParseError("invalid graph6 character", 1, static_cast<int>(offset + i) + 1);
    }
    ++i;
    return c - 63;
  };
  std::int64_t n = next("size");
  if (n == 63) {
    if (i < body.size() && body[i] == 126) {
      ++i;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | next("size");
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | next("size");
    }
  }
  if (n < 1 || n > (1 << 28)) throw ParseError("unsupported graph6 vertex count", 1, static_cast<int>(offset) + 1);
  std::int64_t bits = n * (n - 1) / 2;
  std::int64_t chars = (bits + 5) / 6;
  if (static_cast<std::int64_t>(body.size() - i) != chars) {
    throw ParseError("graph6 body has " + std::to_string(body.size() - i) +
                         " characters, expected " + std::to_string(chars),
                     1, static_cast<int>(offset + i) + 1);
  }
  std::vector<Edge> edges;
  int word = 0;
  int left = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (left == 0) {
        word = next("body");
        left = 6;
      }
      --left;
      if ((word >> left) & 1) edges.push_back({u, v});
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : GraphError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + what),
      line_(line),
      column_(column) {}

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? parse_edge_list(text) : parse_graph6(text);
}

Graph read_graph(std::istream& in, GraphFormat format) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text, format);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  std::int64_t n = g.n();
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int k = 5; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
  }
  int word = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto it = nb.begin();
    for (Vertex u = 0; u < v; ++u) {
      while (it != nb.end() && *it < u) ++it;
      bool bit = it != nb.end() && *it == u;
      word = (word << 1) | (bit ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(word + 63);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((word << (6 - filled)) + 63);
  out += '\n';
  return out;
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? write_edge_list(g) : write_graph6(g);
}

}  // namespace treespan
