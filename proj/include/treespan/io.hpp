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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "treespan/graph.hpp"

namespace treespan {

enum class GraphFormat { kEdgeList, kGraph6 };

std::optional<GraphFormat> parse_format_name(std::string_view name);

/// Parse failure with a 1-based line and column of the offending token.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Edge-list text: header "n m", then m lines "u v" (0-indexed). Anything
/// after '#' on a line is a comment; blank lines are ignored.
///
/// graph6 text: a single line, optionally prefixed by ">>graph6<<".
Graph parse_graph(std::string_view text, GraphFormat format);
Graph read_graph(std::istream& in, GraphFormat format);

/// Deterministic serialization: header then edges in sorted order.
std::string write_edge_list(const Graph& g);
/// Standard graph6 encoding without header, followed by a newline.
std::string write_graph6(const Graph& g);
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace treespan
