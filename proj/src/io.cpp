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

#include "covwalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace covwalk {
namespace {

void dump_into(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(value, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_into(v, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::size_t as_index(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(what + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

Json graph_to_json(const WeightedGraph& g) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.weight}));
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

WeightedGraph graph_from_json(const Json& j, std::size_t max_vertices) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "schema" && key != "n" && key != "edges" && key != "labels") {
      throw std::invalid_argument("graph JSON: unknown field '" + key + "'");
    }
  }
  if (j.contains("schema") && j["schema"] != kSchemaVersion) {
    throw std::invalid_argument("graph JSON: unsupported schema version");
  }
  if (!j.contains("n")) throw std::invalid_argument("graph JSON: missing field 'n'");
  const std::size_t n = as_index(j["n"], "graph JSON field 'n'");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("graph JSON: 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw std::invalid_argument("graph JSON: each edge must be [u, v] or [u, v, w]");
      }
      Edge edge;
      edge.u = as_index(e[0], "edge endpoint");
      edge.v = as_index(e[1], "edge endpoint");
      if (e.size() == 3) {
        if (!e[2].is_number()) throw std::invalid_argument("graph JSON: edge weight must be a number");
        edge.weight = e[2].get<double>();
      }
      edges.push_back(edge);
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw std::invalid_argument("graph JSON: 'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw std::invalid_argument("graph JSON: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return WeightedGraph(n, edges, std::move(labels), max_vertices);
}

Json vertex_map_to_json(const VertexMap& pi) { return Json(pi.images()); }

VertexMap vertex_map_from_json(const Json& j, std::optional<std::size_t> target_size) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("map JSON: expected a nonempty array of target indices");
  }
  std::vector<std::size_t> pi;
  std::size_t max_image = 0;
  for (const auto& v : j) {
    pi.push_back(as_index(v, "map entry"));
    max_image = std::max(max_image, pi.back());
  }
  return VertexMap(std::move(pi), target_size.value_or(max_image + 1));
}

Json gates_to_json(const GateSequence& seq) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["width"] = seq.width();
  Json gates = Json::array();
  for (const Gate& g : seq.gates()) {
    Json e;
    e["kind"] = gate_kind(g);
    if (const auto* h = std::get_if<HadamardGate>(&g)) {
      e["target"] = h->target;
    } else if (const auto* cp = std::get_if<ControlledPhaseGate>(&g)) {
      e["control"] = cp->control;
      e["target"] = cp->target;
      e["angle"] = cp->angle;
    } else if (const auto* s = std::get_if<SwapGate>(&g)) {
      e["a"] = s->a;
      e["b"] = s->b;
    } else if (const auto* d = std::get_if<DiagonalOracleGate>(&g)) {
      e["qubits"] = d->qubits;
      e["function"] = d->phases.function == PhaseFunction::kCycle ? "cycle" : "circulant";
      e["modulus"] = d->phases.modulus;
      if (d->phases.function == PhaseFunction::kCirculant) e["row"] = d->phases.row;
      e["t"] = d->phases.t;
      e["bits"] = d->phases.bits;
      e["hamiltonian"] = d->phases.kind == Hamiltonian::kLaplacian ? "laplacian" : "adjacency";
    } else {
      e["perm"] = std::get<PermutationGate>(g).perm;
    }
    gates.push_back(std::move(e));
  }
  j["gates"] = std::move(gates);
  const GateCounts& c = seq.counts();
  j["counts"] = {{"hadamard", c.hadamard},
                 {"controlled_phase", c.controlled_phase},
                 {"swap", c.swap},
                 {"diagonal_oracle", c.diagonal_oracle},
                 {"permutation", c.permutation},
                 {"total", c.total()}};
  return j;
}

Json read_json(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace covwalk
