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

#include "covwalk/groups.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "covwalk/rng.hpp"

namespace covwalk {
namespace {

void check_order(std::size_t order, std::size_t max_order, const char* what) {
  if (order == 0) throw std::invalid_argument(std::string(what) + ": empty group");
  if (order > max_order) {
    throw std::length_error(std::string(what) + ": order " + std::to_string(order) +
                            " exceeds cap " + std::to_string(max_order));
  }
}

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::vector<std::string> names,
                                    std::size_t max_order) {
  check_order(order, max_order, "FiniteGroup");
  if (table.size() != order * order) {
    throw std::invalid_argument("FiniteGroup: table must have order^2 entries");
  }
  if (!names.empty() && names.size() != order) {
    throw std::invalid_argument("FiniteGroup: name count mismatch");
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.names_ = std::move(names);

  // Latin square.
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      const Element x = g.table_[a * order + b];
      if (x >= order || seen[x]) {
        throw std::invalid_argument("FiniteGroup: table is not a Latin square");
      }
      seen[x] = 1;
    }
  }
  for (std::size_t b = 0; b < order; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < order; ++a) {
      const Element x = g.table_[a * order + b];
      if (seen[x]) throw std::invalid_argument("FiniteGroup: table is not a Latin square");
      seen[x] = 1;
    }
  }

  // Identity: the e with e*e = e is unique in a Latin square.
  bool found = false;
  for (Element e = 0; e < order; ++e) {
    if (g.multiply(e, e) == e) {
      g.identity_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("FiniteGroup: no identity element");
  for (Element x = 0; x < order; ++x) {
    if (g.multiply(g.identity_, x) != x || g.multiply(x, g.identity_) != x) {
      throw std::invalid_argument("FiniteGroup: identity is not two-sided");
    }
  }

  g.inverse_.assign(order, 0);
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      if (g.multiply(y, x) == g.identity_) {
        g.inverse_[x] = y;
        break;
      }
    }
    if (g.multiply(x, g.inverse_[x]) != g.identity_) {
      throw std::invalid_argument("FiniteGroup: inverse is not two-sided");
    }
  }

  auto check_triple = [&](Element a, Element b, Element c) {
    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
      throw std::invalid_argument("FiniteGroup: multiplication is not associative");
    }
  };
  if (order <= 32) {
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b)
        for (Element c = 0; c < order; ++c) check_triple(a, b, c);
  } else {
    CounterRng rng(0x61737363ULL);  // fixed: validation must be reproducible
    for (int i = 0; i < 4096; ++i) {
      check_triple(static_cast<Element>(rng.below(order)),
                   static_cast<Element>(rng.below(order)),
                   static_cast<Element>(rng.below(order)));
    }
  }
  return g;
}

Element FiniteGroup::parse_element(const std::string& token) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == token) return static_cast<Element>(i);
  }
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("unknown group element '" + token + "'");
  }
  // Negative integers are read modulo the order (e.g. -1 in Z/mZ).
  const long long n = static_cast<long long>(order_);
  if (value <= -n || value >= n) {
    throw std::invalid_argument("group element '" + token + "' out of range");
  }
  return static_cast<Element>((value % n + n) % n);
}

FiniteGroup cyclic_group(std::size_t m, std::size_t max_order) {
  check_order(m, max_order, "cyclic_group");
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<Element>((a + b) % m);
  return FiniteGroup::from_table(m, std::move(table), {}, max_order);
}

FiniteGroup dihedral_group(std::size_t n, std::size_t max_order) {
  if (n == 0 || 2 * n > max_order) {
    throw std::length_error("dihedral_group: order 2n outside [2, cap]");
  }
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  // (s^a t^b)(s^c t^d) = s^(a + (-1)^b c) t^(b + d)
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      const std::size_t exp = b == 0 ? (a + c) % n : (a + n - c) % n;
      table[x * order + y] = static_cast<Element>(exp + n * ((b + d) % 2));
    }
  }
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : "s" + std::to_string(a);
    names[a + n] = a == 0 ? "t" : "s" + std::to_string(a) + "t";
  }
  if (n > 1) {
    names[1] = "s";
    if (n > 2) names[n - 1] = "sinv";
    names[1 + n] = "st";
  }
  return FiniteGroup::from_table(order, std::move(table), std::move(names), max_order);
}

FiniteGroup elementary_abelian_2(std::size_t n, std::size_t max_order) {
  if (n >= 32 || (std::size_t{1} << n) > max_order) {
    throw std::length_error("elementary_abelian_2: 2^n exceeds cap");
  }
  const std::size_t order = std::size_t{1} << n;
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = static_cast<Element>(a ^ b);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) names[x] = std::to_string(x);
  names[0] = "e";
  for (std::size_t j = 0; j < n; ++j) names[std::size_t{1} << j] = "e" + std::to_string(j + 1);
  return FiniteGroup::from_table(order, std::move(table), std::move(names), max_order);
}

GeneratingSet::GeneratingSet(const FiniteGroup& g, std::vector<Element> elements)
    : elements_(sorted_unique(std::move(elements))) {
  for (Element s : elements_) {
    if (s >= g.order()) throw std::invalid_argument("GeneratingSet: element out of range");
    if (s == g.identity()) {
      throw std::invalid_argument("GeneratingSet: identity must not be a generator");
    }
    if (!std::binary_search(elements_.begin(), elements_.end(), g.inverse(s))) {
      throw std::invalid_argument("GeneratingSet: not closed under inverses");
    }
  }
  if (elements_.empty()) throw std::invalid_argument("GeneratingSet: empty");
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<Element> elements)
    : elements_(sorted_unique(std::move(elements))) {
  auto contains = [&](Element x) {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  };
  for (Element x : elements_) {
    if (x >= g.order()) throw std::invalid_argument("Subgroup: element out of range");
  }
  if (!contains(g.identity())) throw std::invalid_argument("Subgroup: missing identity");
  for (Element x : elements_) {
    if (!contains(g.inverse(x))) throw std::invalid_argument("Subgroup: not closed under inverses");
    for (Element y : elements_) {
      if (!contains(g.multiply(x, y))) {
        throw std::invalid_argument("Subgroup: not closed under multiplication");
      }
    }
  }
  if (g.order() % elements_.size() != 0) {
    throw std::invalid_argument("Subgroup: order does not divide the group order");
  }
}

Subgroup Subgroup::generated_by(const FiniteGroup& g,
                                const std::vector<Element>& generators) {
  std::set<Element> closure{g.identity()};
  std::vector<Element> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element s : generators) {
        if (s >= g.order()) throw std::invalid_argument("Subgroup: generator out of range");
        const Element y = g.multiply(x, s);
        if (closure.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(g, {closure.begin(), closure.end()});
}

WeightedGraph cayley_graph(const FiniteGroup& g, const GeneratingSet& s) {
  // Edge x -- s^-1 x for each s; each unordered pair is produced twice
  // (once from each endpoint, via s and s^-1), loops never occur.
  std::vector<Edge> edges;
  edges.reserve(g.order() * s.size() / 2);
  for (Element x = 0; x < g.order(); ++x) {
    for (Element gen : s.elements()) {
      const Element y = g.multiply(g.inverse(gen), x);
      if (x < y) edges.push_back({x, y, 1.0});
    }
  }
  return WeightedGraph(g.order(), edges);
}

SchreierGraph schreier_graph(const FiniteGroup& g, const Subgroup& h,
                             const GeneratingSet& s) {
  const std::size_t n = g.order();
  SchreierGraph out;
  out.coset_of.assign(n, n);
  for (Element x = 0; x < n; ++x) {
    if (out.coset_of[x] != n) continue;
    std::vector<Element> coset;
    for (Element k : h.elements()) coset.push_back(g.multiply(x, k));
    std::sort(coset.begin(), coset.end());
    for (Element y : coset) out.coset_of[y] = out.cosets.size();
    out.cosets.push_back(std::move(coset));
  }
  const std::size_t m = out.cosets.size();
  std::vector<double> count(m * m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    for (Element x : out.cosets[c]) {
      for (Element gen : s.elements()) {
        count[c * m + out.coset_of[g.multiply(g.inverse(gen), x)]] += 1.0;
      }
    }
  }
  const double inv_h = 1.0 / static_cast<double>(h.order());
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      if (count[a * m + b] != count[b * m + a]) {
        throw std::logic_error("schreier_graph: asymmetric coset counts");
      }
      if (count[a * m + b] > 0.0) edges.push_back({a, b, count[a * m + b] * inv_h});
    }
  }
  out.graph = WeightedGraph(m, edges);
  return out;
}

WeightedGraph hypercube(std::size_t n, std::size_t max_vertices) {
  if (n >= 32 || (std::size_t{1} << n) > max_vertices) {
    throw std::length_error("hypercube: 2^n exceeds cap");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t y = x ^ (std::size_t{1} << j);
      if (x < y) edges.push_back({x, y, 1.0});
    }
  }
  return WeightedGraph(size, edges, {}, max_vertices);
}

WeightedGraph cycle(std::size_t m, std::size_t max_vertices) {
  if (m < 2) throw std::invalid_argument("cycle: need m >= 2");
  if (m > max_vertices) throw std::length_error("cycle: m exceeds cap");
  std::vector<Edge> edges;
  if (m == 2) {
    edges.push_back({0, 1, 1.0});
  } else {
    for (std::size_t k = 0; k < m; ++k) edges.push_back({k, (k + 1) % m, 1.0});
  }
  return WeightedGraph(m, edges, {}, max_vertices);
}

WeightedGraph torus(std::size_t m, std::size_t size, std::size_t max_vertices) {
  if (m == 0) throw std::invalid_argument("torus: need at least one factor");
  const WeightedGraph factor = cycle(size, max_vertices);
  WeightedGraph out = factor;
  for (std::size_t i = 1; i < m; ++i) out = cartesian_product(out, factor, max_vertices);
  return out;
}

HypercubeQuotient hypercube_path_quotient(std::size_t n, std::size_t max_vertices) {
  if (n == 0) throw std::invalid_argument("hypercube_path_quotient: need n >= 1");
  if (n >= 32 || (std::size_t{1} << n) > max_vertices) {
    throw std::length_error("hypercube_path_quotient: 2^n exceeds cap");
  }
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n; ++j) {
    edges.push_back({j, j + 1, std::sqrt(static_cast<double>((j + 1) * (n - j)))});
  }
  HypercubeQuotient out{WeightedGraph(n + 1, edges), {}};
  out.hamming.resize(std::size_t{1} << n);
  for (std::size_t x = 0; x < out.hamming.size(); ++x) {
    out.hamming[x] = static_cast<std::size_t>(__builtin_popcountll(x));
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

WeightedGraph paley_graph(std::size_t q, std::size_t max_vertices) {
  if (!is_prime(q)) throw std::invalid_argument("paley_graph: q must be prime");
  if (q % 4 != 1) throw std::invalid_argument("paley_graph: q must be 1 mod 4");
  if (q > max_vertices) throw std::length_error("paley_graph: q exceeds cap");
  std::vector<char> square(q, 0);
  for (std::size_t x = 1; x < q; ++x) square[(x * x) % q] = 1;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < q; ++u) {
    for (std::size_t v = u + 1; v < q; ++v) {
      if (square[(v - u) % q]) edges.push_back({u, v, 1.0});
    }
  }
  return WeightedGraph(q, edges, {}, max_vertices);
}

}  // namespace covwalk
