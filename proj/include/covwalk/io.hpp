// Copyright 2026 The covwalk Authors
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covwalk/covering.hpp"
#include "covwalk/gates.hpp"
#include "covwalk/graph.hpp"

namespace covwalk {

using Json = nlohmann::ordered_json;

/// Version tag written into every JSON document.
inline constexpr int kSchemaVersion = 1;

/// %.17g, or "null" for non-finite values.
std::string format_double(double x);

/// Serializes with every floating-point number at 17 significant digits.
/// Deterministic for identical input.
std::string dump_json(const Json& j, int indent = 2);

/// {"schema": 1, "n": n, "edges": [[u, v, w], ...], "labels": [...]}; the
/// labels key is omitted when the graph has none.
Json graph_to_json(const WeightedGraph& g);

/// Accepts the layout above with "schema" optional. Repeated pairs add up.
/// Throws std::invalid_argument with the offending field on bad input.
WeightedGraph graph_from_json(const Json& j, std::size_t max_vertices = kDefaultMaxVertices);

/// pi.json: an array of target indices, one per source vertex.
Json vertex_map_to_json(const VertexMap& pi);

/// Target size defaults to 1 + max image.
VertexMap vertex_map_from_json(const Json& j, std::optional<std::size_t> target_size = {});

/// {"width": w, "gates": [{"kind": ..., ...}]}.
Json gates_to_json(const GateSequence& seq);

/// Parses a whole stream; throws std::invalid_argument on malformed JSON.
Json read_json(std::istream& in);

}  // namespace covwalk
