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

#include "covwalk/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "covwalk/covering.hpp"
#include "covwalk/experiments.hpp"
#include "covwalk/gates.hpp"
#include "covwalk/groups.hpp"
#include "covwalk/hidden_cover.hpp"
#include "covwalk/io.hpp"
#include "covwalk/rng.hpp"
#include "covwalk/spectral.hpp"

namespace covwalk::cli {
namespace {

// Thrown for bad command-line values found after parsing; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Demo {
  std::string name;
  std::string description;
  std::function<ExperimentResult(std::uint64_t seed)> run;
};

std::vector<Demo> demos() {
  return {
      {"covers", "cover verification with corrupted-edge controls",
       [](std::uint64_t) { return cover_verification_experiment(); }},
      {"quotient-walk", "quotient-walk residuals for random initial states",
       [](std::uint64_t seed) { return quotient_walk_experiment(seed); }},
      {"containment", "quotient spectra inside cover spectra",
       [](std::uint64_t) { return spectrum_containment_experiment(); }},
      {"circulant", "FFT circulant spectra against the dense eigensolver",
       [](std::uint64_t) { return circulant_experiment(); }},
      {"compiler", "compiled cycle and torus walks against exact propagators",
       [](std::uint64_t) { return gate_compiler_experiment(); }},
      {"trotter", "first-order Trotter error against the step count",
       [](std::uint64_t) { return trotter_experiment(); }},
      {"hidden-cover", "hidden cyclic cover recovery over prime pairs up to 31",
       [](std::uint64_t seed) { return hidden_cover_experiment(seed); }},
      {"confinement", "eigenvalue samples on constant-coset states of C_30",
       [](std::uint64_t seed) { return confinement_experiment(seed); }},
      {"dihedral", "isospectral Schreier graphs of dihedral groups",
       [](std::uint64_t) { return dihedral_experiment(); }},
  };
}

Hamiltonian parse_kind(const std::string& s) {
  if (s == "laplacian") return Hamiltonian::kLaplacian;
  if (s == "adjacency") return Hamiltonian::kAdjacency;
  throw UsageError("unknown hamiltonian '" + s + "' (laplacian|adjacency)");
}

const char* kind_name(Hamiltonian k) {
  return k == Hamiltonian::kLaplacian ? "laplacian" : "adjacency";
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

Json load_json(const std::string& path, std::istream& in) {
  if (path == "-") return read_json(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_json(f);
}

std::string json_text(const Json& j) { return dump_json(j) + "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

FiniteGroup parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("group must look like cyclic:<m>, dihedral:<n> or z2:<n>");
  }
  const std::string family = spec.substr(0, colon);
  std::size_t k = 0;
  try {
    k = std::stoul(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("group size in '" + spec + "' is not a number");
  }
  if (family == "cyclic") return cyclic_group(k);
  if (family == "dihedral") return dihedral_group(k);
  if (family == "z2") return elementary_abelian_2(k);
  throw UsageError("unknown group family '" + family + "'");
}

std::vector<Element> parse_elements(const FiniteGroup& g, const std::string& list) {
  std::vector<Element> out;
  for (const std::string& tok : split(list, ',')) out.push_back(g.parse_element(tok));
  return out;
}

// cyclic groups carry no names; fall back to the integer
std::string element_name(const FiniteGroup& g, Element x) {
  return g.names().empty() ? std::to_string(x) : g.names()[x];
}

WeightedGraph with_group_labels(const WeightedGraph& graph, const std::vector<std::string>& names) {
  return WeightedGraph(graph.num_vertices(), graph.edges(), names);
}

std::string walk_csv(const QuantumState& psi) {
  std::string s = "vertex,probability\n";
  const std::vector<double> p = psi.probabilities();
  for (std::size_t v = 0; v < p.size(); ++v) {
    s += std::to_string(v) + "," + format_double(p[v]) + "\n";
  }
  return s;
}

QuantumState initial_state(const std::string& spec, std::size_t n, std::uint64_t seed) {
  if (spec == "uniform") {
    return QuantumState::normalized(Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n)));
  }
  if (spec == "random") return random_state(n, seed, 0);
  if (spec.rfind("vertex:", 0) == 0) {
    std::size_t v = 0;
    try {
      v = std::stoul(spec.substr(7));
    } catch (const std::exception&) {
      throw UsageError("bad vertex in --initial '" + spec + "'");
    }
    if (v >= n) throw UsageError("--initial vertex out of range");
    return QuantumState::basis(n, v);
  }
  throw UsageError("--initial must be vertex:<k>, uniform or random");
}

Json counts_json(const GateSequence& seq) {
  const GateCounts& c = seq.counts();
  const KickbackCost k = seq.kickback_cost();
  return {{"hadamard", c.hadamard},
          {"controlled_phase", c.controlled_phase},
          {"swap", c.swap},
          {"diagonal_oracle", c.diagonal_oracle},
          {"permutation", c.permutation},
          {"total", c.total()},
          {"kickback_ancilla_qubits", k.ancilla_qubits},
          {"kickback_preparation_gates", k.preparation_gates}};
}

// Exact propagator of what `seq` approximates: the tensor product of the
// Hamiltonians named by its oracle gates, one per qubit block.
Eigen::MatrixXcd reference_unitary(const GateSequence& seq, double t) {
  std::vector<SpectralDecomposition> decomps;
  for (const Gate& g : seq.gates()) {
    if (const auto* d = std::get_if<DiagonalOracleGate>(&g)) {
      const SymmetricMatrix h = phase_hamiltonian(d->phases);
      SpectralDecomposition sd = eigendecompose(h);
      refine_eigenvalues(sd, h);
      decomps.push_back(std::move(sd));
    }
  }
  std::vector<std::pair<const SpectralDecomposition*, double>> factors;
  for (const auto& d : decomps) factors.emplace_back(&d, t);
  return tensor_propagator(factors).matrix();
}

struct Options {
  std::string out = "-";
  std::uint64_t seed = 0;
  // gen
  std::size_t m = 0, n = 0, size = 0, q = 0;
  std::string group, gens, subgroup, pi_out;
  // walk
  std::string graph = "-", hamiltonian = "laplacian", initial = "vertex:0";
  double t = 1.0;
  // cover
  std::string y, x, pi;
  std::size_t states = 20;
  double tol = -1.0;
  // compile
  int bits = 32;
  std::string row, emit;
  bool verify = false, dense_fallback = false;
  // hiddencover
  std::size_t trials = 100, max_samples = 25;
};

int cmd_gen(const std::string& which, const Options& o, std::ostream& out) {
  WeightedGraph g;
  std::optional<VertexMap> pi;
  if (which == "cycle") {
    g = cycle(o.m);
  } else if (which == "hypercube") {
    g = hypercube(o.n);
  } else if (which == "torus") {
    g = torus(o.m, o.size);
  } else if (which == "paley") {
    g = paley_graph(o.q);
  } else if (which == "path-quotient") {
    HypercubeQuotient hq = hypercube_path_quotient(o.n);
    g = std::move(hq.path);
    pi.emplace(std::move(hq.hamming), o.n + 1);
  } else {
    const FiniteGroup grp = parse_group(o.group);
    const GeneratingSet s(grp, parse_elements(grp, o.gens));
    if (which == "cayley") {
      g = with_group_labels(cayley_graph(grp, s), grp.names());
    } else {
      const Subgroup h = Subgroup::generated_by(grp, parse_elements(grp, o.subgroup));
      SchreierGraph sg = schreier_graph(grp, h, s);
      std::vector<std::string> labels;
      for (const auto& coset : sg.cosets) labels.push_back(element_name(grp, coset.front()) + "H");
      g = WeightedGraph(sg.graph.num_vertices(), sg.graph.edges(), std::move(labels));
      pi.emplace(std::move(sg.coset_of), sg.cosets.size());
    }
  }
  if (!o.pi_out.empty()) {
    if (!pi) throw UsageError("--pi-out applies to schreier and path-quotient only");
    emit(o.pi_out, json_text(vertex_map_to_json(*pi)), out);
  }
  emit(o.out, json_text(graph_to_json(g)), out);
  return kExitSuccess;
}

int cmd_walk(const Options& o, std::istream& in, std::ostream& out) {
  const WeightedGraph g = graph_from_json(load_json(o.graph, in));
  const SymmetricMatrix h = hamiltonian_matrix(g, parse_kind(o.hamiltonian));
  const SpectralDecomposition d = eigendecompose(h);
  const QuantumState psi = evolve(initial_state(o.initial, g.num_vertices(), o.seed), d, o.t);
  emit(o.out, walk_csv(psi), out);
  return kExitSuccess;
}

int cmd_cover(const std::string& which, const Options& o, std::istream& in, std::ostream& out) {
  const WeightedGraph y = graph_from_json(load_json(o.y, in));
  if (which == "verify") {
    const WeightedGraph x = graph_from_json(load_json(o.x, in));
    const VertexMap pi = vertex_map_from_json(load_json(o.pi, in), x.num_vertices());
    const CoverReport r = verify_cover(y, x, pi);
    const Json j = {{"schema", kSchemaVersion},
                    {"is_cover", r.is_cover},
                    {"mu", r.mu},
                    {"max_residual", r.max_residual},
                    {"mu_spread", r.mu_spread},
                    {"mu_consistent", r.mu_consistent},
                    {"equitable_spread", r.equitable_spread},
                    {"worst_fibre", r.worst_fibre},
                    {"worst_target", r.worst_target}};
    emit(o.out, json_text(j), out);
    return r.is_cover ? kExitSuccess : kExitVerificationFailure;
  }
  const VertexMap pi = vertex_map_from_json(load_json(o.pi, in));
  if (which == "quotient") {
    QuotientGraph q;
    try {
      q = quotient_graph(y, pi);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(e.what());
    }
    emit(o.out, json_text(graph_to_json(q.graph)), out);
    return kExitSuccess;
  }
  // walkcheck
  const double tolerance = o.tol >= 0 ? o.tol : tol::kEvolution;
  std::optional<CoveringMap> cm;
  try {
    cm.emplace(CoveringMap::onto_quotient(y, pi));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  std::vector<Hamiltonian> kinds;
  if (o.hamiltonian == "both") {
    kinds = {Hamiltonian::kLaplacian, Hamiltonian::kAdjacency};
  } else {
    kinds = {parse_kind(o.hamiltonian)};
  }
  Json rows = Json::array();
  double worst = 0.0;
  for (Hamiltonian kind : kinds) {
    const QuotientWalk walk(*cm, kind);
    double kind_worst = 0.0;
    for (std::size_t s = 0; s < o.states; ++s) {
      kind_worst = std::max(kind_worst,
                            walk.residual(random_state(pi.target_size(), o.seed, s), o.t));
    }
    worst = std::max(worst, kind_worst);
    rows.push_back({{"hamiltonian", kind_name(kind)}, {"max_residual", kind_worst}});
  }
  const bool pass = worst <= tolerance;
  const Json j = {{"schema", kSchemaVersion}, {"t", o.t},           {"seed", o.seed},
                  {"states", o.states},       {"tolerance", tolerance}, {"residuals", rows},
                  {"max_residual", worst},    {"pass", pass}};
  emit(o.out, json_text(j), out);
  return pass ? kExitSuccess : kExitVerificationFailure;
}

std::vector<double> parse_row(const std::string& s) {
  std::vector<double> row;
  for (const std::string& tok : split(s, ',')) {
    try {
      std::size_t used = 0;
      row.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--row entry '" + tok + "' is not a number");
    }
  }
  if (row.empty()) throw UsageError("--row is empty");
  return row;
}

int cmd_compile(const std::string& which, const Options& o, std::ostream& out) {
  const Hamiltonian kind = parse_kind(o.hamiltonian);
  Json report = {{"schema", kSchemaVersion}, {"family", which}, {"t", o.t}, {"bits", o.bits},
                 {"hamiltonian", kind_name(kind)}};
  std::optional<GateSequence> seq;
  std::size_t blocks = 1;
  if (which == "cycle") {
    seq.emplace(compile_cycle_walk(o.n, o.t, o.bits, kind));
  } else if (which == "torus") {
    seq.emplace(compile_torus_walk(o.m, o.n, o.t, o.bits, kind));
    blocks = o.m;
  } else {
    const std::vector<double> row = parse_row(o.row);
    const std::size_t m = row.size();
    if (m >= 2 && (m & (m - 1)) == 0) {
      seq.emplace(compile_circulant_walk(row, o.t, o.bits, kind));
    } else if (!o.dense_fallback) {
      throw UsageError("circulant size " + std::to_string(m) +
                       " is not a power of two; pass --dense-fallback for the dense propagator");
    } else {
      // No gate sequence exists; report the dense propagator instead.
      PhaseSpec spec;
      spec.function = PhaseFunction::kCirculant;
      spec.modulus = m;
      spec.row = row;
      spec.kind = kind;
      (void)circulant_spectrum(row);
      const SymmetricMatrix h = phase_hamiltonian(spec);
      const Propagator u = propagator(eigendecompose(h), o.t);
      report["fallback"] = "dense";
      report["dimension"] = m;
      report["unitarity_defect"] = u.unitarity_defect();
      emit(o.out, json_text(report), out);
      return kExitSuccess;
    }
  }
  report["width"] = seq->width();
  report["counts"] = counts_json(*seq);
  if (!o.emit.empty()) emit(o.emit, json_text(gates_to_json(*seq)), out);
  int code = kExitSuccess;
  if (o.verify) {
    const double slack = o.tol >= 0 ? o.tol : 1e-9;
    const double bound =
        static_cast<double>(blocks) * 2.0 * std::numbers::pi * std::ldexp(1.0, -o.bits) + slack;
    const UnitaryDistance d = unitary_distance(simulate_gates(*seq), reference_unitary(*seq, o.t));
    const bool pass = d.operator_norm <= bound;
    report["distance"] = d.operator_norm;
    report["max_entry"] = d.max_entry;
    report["bound"] = bound;
    report["pass"] = pass;
    if (!pass) code = kExitVerificationFailure;
  }
  emit(o.out, json_text(report), out);
  return code;
}

std::vector<std::size_t> proper_divisors(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t k = 2; k < n; ++k) {
    if (n % k == 0) d.push_back(k);
  }
  return d;
}

int cmd_hiddencover(const std::string& which, const Options& o, std::ostream& out) {
  if (which == "dihedral") {
    const DihedralIsospectralityReport rep = dihedral_isospectrality_report(o.n);
    const FiniteGroup g = dihedral_group(o.n);
    std::string csv = "subgroup_generator,index,eigenvalue\n";
    for (std::size_t j = 0; j < o.n; ++j) {
      const Eigen::VectorXd& s = rep.spectra[j];
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        csv += g.names()[j + o.n] + "," + std::to_string(i) + "," + format_double(s(i)) + "\n";
      }
    }
    for (Eigen::Index i = 0; i < rep.rotation_control.size(); ++i) {
      csv += "s," + std::to_string(i) + "," + format_double(rep.rotation_control(i)) + "\n";
    }
    emit(o.out, csv, out);
    if (o.out != "-" && !o.out.empty()) {
      const Json j = {{"schema", kSchemaVersion},
                      {"n", o.n},
                      {"max_pairwise_distance", rep.max_pairwise_distance},
                      {"indistinguishable", rep.indistinguishable},
                      {"rotation_control_distance", rep.control_distance}};
      out << json_text(j);
    }
    return kExitSuccess;
  }

  const std::vector<std::size_t> divisors = proper_divisors(o.n);
  if (divisors.empty()) throw UsageError("--n must be composite");
  HiddenCycleSolver solver(o.n, o.bits);
  Json rows = Json::array();
  std::size_t successes = 0, wrong = 0, samples = 0, good_samples = 0;
  for (std::size_t i = 0; i < o.trials; ++i) {
    CounterRng pick(o.seed, 3 * i);
    const std::size_t p = divisors[pick.below(divisors.size())];
    CosetOracle oracle(o.n, p, o.seed, 3 * i + 1);
    CounterRng rng(o.seed, 3 * i + 2);
    const HiddenCoverResult r = solver.solve(oracle, o.max_samples, rng);
    if (r.success && r.period == p) ++successes;
    if (r.success && r.period != p) ++wrong;
    for (const HiddenCoverSample& s : r.samples) {
      ++samples;
      if (static_cast<std::size_t>(s.fraction.denominator) == p) ++good_samples;
    }
    rows.push_back({{"trial", i},
                    {"hidden_period", p},
                    {"recovered_period", r.period},
                    {"success", r.success && r.period == p},
                    {"samples", r.samples.size()}});
  }
  const double trials = static_cast<double>(std::max<std::size_t>(o.trials, 1));
  const Json j = {{"schema", kSchemaVersion},
                  {"n", o.n},
                  {"bits", o.bits},
                  {"seed", o.seed},
                  {"trials", o.trials},
                  {"max_samples", o.max_samples},
                  {"successes", successes},
                  {"wrong", wrong},
                  {"failures", o.trials - successes - wrong},
                  {"success_rate", static_cast<double>(successes) / trials},
                  {"mean_samples", static_cast<double>(samples) / trials},
                  {"single_sample_success_rate",
                   samples ? static_cast<double>(good_samples) / static_cast<double>(samples) : 0.0},
                  {"trials_detail", rows}};
  emit(o.out, json_text(j), out);
  return wrong == 0 ? kExitSuccess : kExitVerificationFailure;
}

int cmd_demo(const std::string& which, const Options& o, std::istream& in, std::ostream& out,
             std::ostream& err) {
  ExperimentResult r;
  if (which == "hypercube") {
    r = hypercube_experiment(o.n, o.seed);
  } else if (which == "determinism") {
    Json rows = Json::array();
    r.pass = true;
    std::vector<std::vector<std::string>> commands;
    for (const Demo& d : demos()) commands.push_back({"demo", d.name, "--seed", "0"});
    commands.push_back({"demo", "hypercube", "--n", "4", "--seed", "0"});
    for (const auto& cmd : commands) {
      std::ostringstream a, b, ea, eb;
      const int ca = run(cmd, in, a, ea);
      const int cb = run(cmd, in, b, eb);
      const bool same = ca == cb && a.str() == b.str() && ea.str() == eb.str();
      r.pass = r.pass && same;
      rows.push_back({{"command", cmd}, {"exit_code", ca}, {"bytes", a.str().size()},
                      {"identical", same}});
    }
    r.data = {{"criterion", "determinism"}, {"runs", rows}, {"pass", r.pass}};
  } else {
    for (const Demo& d : demos()) {
      if (d.name == which) r = d.run(o.seed);
    }
  }
  Json j = {{"schema", kSchemaVersion}};
  for (const auto& [k, v] : r.data.items()) j[k] = v;
  emit(o.out, json_text(j), out);
  (void)err;
  return r.pass ? kExitSuccess : kExitVerificationFailure;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> names;
  for (const Demo& d : demos()) names.push_back(d.name);
  names.push_back("hypercube");
  names.push_back("determinism");
  return names;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Continuous-time quantum walks, graph covers and walk compilation", "covwalk"};
  app.require_subcommand(1);

  const auto add_out = [&](CLI::App* c, const std::string& what) {
    c->add_option("--out", o.out, what + " (default: stdout)");
  };
  const auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "64-bit seed for the counter-based generator")
        ->default_val(0);
  };

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph in the JSON graph format");
  gen->require_subcommand(1);
  std::vector<CLI::App*> gens;
  {
    auto* c = gen->add_subcommand("cycle", "Cycle C_m");
    c->add_option("--m", o.m, "Number of vertices")->required();
    gens.push_back(c);
    c = gen->add_subcommand("hypercube", "Hypercube Q_n");
    c->add_option("--n", o.n, "Dimension")->required();
    gens.push_back(c);
    c = gen->add_subcommand("cayley", "Cayley graph X(G, S)");
    c->add_option("--group", o.group, "cyclic:<m>, dihedral:<n> or z2:<n>")->required();
    c->add_option("--gens", o.gens, "Comma-separated generator names or integers")->required();
    gens.push_back(c);
    c = gen->add_subcommand("schreier", "Schreier graph X(G/H, S)");
    c->add_option("--group", o.group, "cyclic:<m>, dihedral:<n> or z2:<n>")->required();
    c->add_option("--gens", o.gens, "Comma-separated generator names or integers")->required();
    c->add_option("--subgroup", o.subgroup, "Comma-separated generators of H")->required();
    c->add_option("--pi-out", o.pi_out, "Also write the coset map g -> gH as pi.json");
    gens.push_back(c);
    c = gen->add_subcommand("torus", "m-fold product of cycles C_size");
    c->add_option("--m", o.m, "Number of factors")->required();
    c->add_option("--size", o.size, "Cycle length")->required();
    gens.push_back(c);
    c = gen->add_subcommand("paley", "Paley graph on F_q, q prime and 1 mod 4");
    c->add_option("--q", o.q, "Field size")->required();
    gens.push_back(c);
    c = gen->add_subcommand("path-quotient", "Weighted path quotient of Q_n");
    c->add_option("--n", o.n, "Hypercube dimension")->required();
    c->add_option("--pi-out", o.pi_out, "Also write the Hamming-weight map as pi.json");
    gens.push_back(c);
    for (auto* g : gens) add_out(g, "Graph JSON path");
  }

  // walk
  CLI::App* walk = app.add_subcommand("walk", "Evolve a state and write vertex probabilities");
  walk->add_option("--graph", o.graph, "Graph JSON path, - for stdin")->default_val("-");
  walk->add_option("--hamiltonian", o.hamiltonian, "laplacian or adjacency")
      ->default_val("laplacian");
  walk->add_option("--t", o.t, "Evolution time")->required();
  walk->add_option("--initial", o.initial, "vertex:<k>, uniform or random")
      ->default_val("vertex:0");
  add_seed(walk);
  add_out(walk, "CSV path (vertex,probability)");

  // cover
  CLI::App* cover = app.add_subcommand("cover", "Graph cover tools");
  cover->require_subcommand(1);
  CLI::App* cover_verify = cover->add_subcommand("verify", "Check that pi: Y -> X is a cover");
  cover_verify->add_option("--Y", o.y, "Cover graph JSON")->required();
  cover_verify->add_option("--X", o.x, "Base graph JSON")->required();
  cover_verify->add_option("--pi", o.pi, "pi.json")->required();
  add_out(cover_verify, "Report JSON path");
  CLI::App* cover_quotient = cover->add_subcommand("quotient", "Quotient graph P A(Y) P^T");
  cover_quotient->add_option("--Y", o.y, "Cover graph JSON")->required();
  cover_quotient->add_option("--pi", o.pi, "pi.json")->required();
  add_out(cover_quotient, "Quotient graph JSON path");
  CLI::App* cover_walk = cover->add_subcommand("walkcheck", "Quotient-walk residuals");
  cover_walk->add_option("--Y", o.y, "Cover graph JSON")->required();
  cover_walk->add_option("--pi", o.pi, "pi.json")->required();
  cover_walk->add_option("--t", o.t, "Evolution time")->default_val(1.0);
  cover_walk->add_option("--hamiltonian", o.hamiltonian, "laplacian, adjacency or both")
      ->default_val("both");
  cover_walk->add_option("--states", o.states, "Number of random initial states")
      ->default_val(20);
  cover_walk->add_option("--tol", o.tol, "Residual tolerance (default 1e-9)");
  add_seed(cover_walk);
  add_out(cover_walk, "Report JSON path");

  // compile
  CLI::App* compile = app.add_subcommand("compile", "Compile a walk into gates");
  compile->require_subcommand(1);
  std::vector<CLI::App*> compiles;
  {
    auto* c = compile->add_subcommand("cycle", "Walk on C_{2^n}");
    c->add_option("--n", o.n, "Qubits")->required();
    compiles.push_back(c);
    c = compile->add_subcommand("circulant", "Walk on a symmetric circulant");
    c->add_option("--row", o.row, "Comma-separated first row")->required();
    c->add_flag("--dense-fallback", o.dense_fallback,
                "Report the dense propagator when the size is not a power of two");
    compiles.push_back(c);
    c = compile->add_subcommand("torus", "Walk on the m-torus of C_{2^n}");
    c->add_option("--m", o.m, "Factors")->required();
    c->add_option("--n", o.n, "Qubits per factor")->required();
    compiles.push_back(c);
    for (auto* c2 : compiles) {
      c2->add_option("--t", o.t, "Evolution time")->required();
      c2->add_option("--bits", o.bits, "Oracle phase precision")->default_val(32);
      c2->add_option("--hamiltonian", o.hamiltonian, "adjacency or laplacian")
          ->default_val("adjacency");
      c2->add_option("--emit", o.emit, "Write the gate list as JSON");
      c2->add_flag("--verify", o.verify, "Simulate and compare with the exact propagator");
      c2->add_option("--tol", o.tol, "Additive slack on the distance bound (default 1e-9)");
      add_out(c2, "Report JSON path");
    }
  }

  // hiddencover
  CLI::App* hidden = app.add_subcommand("hiddencover", "Hidden cover experiments");
  hidden->require_subcommand(1);
  CLI::App* hidden_solve = hidden->add_subcommand("solve", "Recover hidden cyclic quotients");
  hidden_solve->add_option("--n", o.n, "Composite modulus")->required();
  hidden_solve->add_option("--bits", o.bits, "Measurement precision")->default_val(32);
  hidden_solve->add_option("--trials", o.trials, "Number of trials")->default_val(100);
  hidden_solve->add_option("--max-samples", o.max_samples, "Samples per trial")->default_val(25);
  add_seed(hidden_solve);
  add_out(hidden_solve, "Statistics JSON path");
  CLI::App* hidden_dihedral =
      hidden->add_subcommand("dihedral", "Spectra of D_n Schreier graphs for transpositions");
  hidden_dihedral->add_option("--n", o.n, "Dihedral parameter")->required();
  add_out(hidden_dihedral, "Spectra CSV path");

  // demo
  CLI::App* demo = app.add_subcommand("demo", "Reproducible experiment runs");
  demo->require_subcommand(1);
  std::vector<CLI::App*> demo_cmds;
  for (const Demo& d : demos()) demo_cmds.push_back(demo->add_subcommand(d.name, d.description));
  CLI::App* demo_hyper = demo->add_subcommand("hypercube", "Q_n quotient walk residuals");
  demo_hyper->add_option("--n", o.n, "Hypercube dimension")->default_val(4);
  demo_cmds.push_back(demo_hyper);
  demo_cmds.push_back(demo->add_subcommand("determinism", "Run every demo twice and compare"));
  for (auto* c : demo_cmds) {
    add_seed(c);
    add_out(c, "Result JSON path");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto chosen = [](CLI::App* parent) -> CLI::App* {
    auto subs = parent->get_subcommands();
    return subs.empty() ? nullptr : subs.front();
  };

  try {
    CLI::App* top = chosen(&app);
    CLI::App* leaf = top->get_subcommands().empty() ? nullptr : chosen(top);
    const std::string name = leaf ? leaf->get_name() : "";
    if (top == gen) return cmd_gen(name, o, out);
    if (top == walk) return cmd_walk(o, in, out);
    if (top == cover) return cmd_cover(name, o, in, out);
    if (top == compile) return cmd_compile(name, o, out);
    if (top == hidden) return cmd_hiddencover(name, o, out);
    if (top == demo) return cmd_demo(name, o, in, out, err);
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

}  // namespace covwalk::cli
