#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa::testing {

// v --e--> w
inline Graph line2() { return parse_graph("vertex v\nvertex w\nedge e v w\n"); }

// v1 -> v2 -> ... -> vn with edges e1 .. e(n-1)
inline Graph line(std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    g.add_edge("e" + std::to_string(i), i - 1, i);
  return g;
}

// one vertex u with loops a, b; a is the special edge
inline Graph rose2() { return parse_graph("vertex u\nedge a u u\nedge b u u\n"); }

inline Graph disc2() { return parse_graph("vertex u\nvertex v\n"); }

inline Graph loop1() { return parse_graph("vertex u\nedge c u u\n"); }

// u --f--> v --g--> u, no exits
inline Graph two_cycle() {
  return parse_graph("vertex u\nvertex v\nedge f u v\nedge g v u\n");
}

// loop l at x with exit m; x -> y -> {z, w}, w -> x closes a second cycle
inline Graph mixed4() {
  return parse_graph(
      "vertex x\nvertex y\nvertex z\nvertex w\n"
      "edge l x x\nedge m x y\nedge n y z\nedge o y w\nedge q w x\n");
}

// loop c at x exits into the line x -> y -> z; {y, z} is hereditary saturated
inline Graph hs3() {
  return parse_graph(
      "vertex x\nvertex y\nvertex z\nedge c x x\nedge e x y\nedge f y z\n");
}

inline std::shared_ptr<const Graph> share(Graph g) {
  return std::make_shared<const Graph>(std::move(g));
}

// Uniformly random multigraph; loops allowed when `loops` is set.
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices,
                          std::size_t max_edges, bool loops = true) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(0, max_edges);
  std::size_t m = ne(rng);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t s = pick(rng), r = pick(rng);
    if (!loops && s == r) continue;
    g.add_edge("e" + std::to_string(i), s, r);
  }
  return g;
}

inline bool is_weakly_connected(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    parent[find(g.source(e))] = find(g.range(e));
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

// Every connected acyclic graph on n <= max_vertices vertices whose edges all
// run from a lower to a higher index, with at most max_edges edges (parallel
// edges allowed). Every acyclic graph is isomorphic to one of these.
inline std::vector<Graph> connected_acyclic_graphs(std::size_t max_vertices,
                                                   std::size_t max_edges) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::size_t> mult(slots.size(), 0);
    // odometer over multiplicities with total <= max_edges
    while (true) {
      Graph g;
      for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
      std::size_t k = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        for (std::size_t c = 0; c < mult[s]; ++c)
          g.add_edge("e" + std::to_string(++k), slots[s].first, slots[s].second);
      if (is_weakly_connected(g)) out.push_back(std::move(g));

      std::size_t total = 0;
      for (auto m : mult) total += m;
      std::size_t pos = 0;
      while (pos < mult.size()) {
        if (total < max_edges) {
          ++mult[pos];
          break;
        }
        total -= mult[pos];
        mult[pos] = 0;
        ++pos;
      }
      if (pos == mult.size()) break;
    }
  }
  return out;
}

inline RingElement random_coefficient(const Ring& r, std::mt19937_64& rng) {
  for (;;) {
    RingElement c = r.random_element(rng);
    if (!c.is_zero()) return c;
  }
}

// Random well-formed monomial alpha beta^* with |alpha|, |beta| <= max_len.
inline Monomial random_monomial(const Graph& g, std::mt19937_64& rng,
                                std::size_t max_len) {
  std::vector<Path> paths = enumerate_paths(g, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
  for (;;) {
    const Path& a = paths[pick(rng)];
    const Path& b = paths[pick(rng)];
    if (a.range() == b.range()) return Monomial(a, b);
  }
}

inline RawSum random_raw(const Graph& g, const Ring& r, std::mt19937_64& rng,
                         std::size_t max_terms = 4, std::size_t max_len = 2) {
  std::uniform_int_distribution<std::size_t> nt(1, max_terms);
  RawSum raw;
  std::size_t n = nt(rng);
  for (std::size_t i = 0; i < n; ++i)
    raw.emplace_back(random_monomial(g, rng, max_len), random_coefficient(r, rng));
  return raw;
}

inline AlgebraElement random_element(const LeavittPathAlgebra& alg,
                                     std::mt19937_64& rng, std::size_t max_terms = 4,
                                     std::size_t max_len = 2) {
  return alg.from_raw(random_raw(alg.graph(), alg.ring(), rng, max_terms, max_len));
}

// Random element all of whose terms have degree `deg`.
inline AlgebraElement random_homogeneous(const LeavittPathAlgebra& alg,
                                         std::mt19937_64& rng, int deg,
                                         std::size_t max_terms = 3,
                                         std::size_t max_len = 3) {
  std::vector<Path> paths = enumerate_paths(alg.graph(), max_len);
  std::vector<Monomial> pool;
  for (const Path& a : paths)
    for (const Path& b : paths)
      if (a.range() == b.range() &&
          static_cast<int>(a.length()) - static_cast<int>(b.length()) == deg)
        pool.emplace_back(a, b);
  RawSum raw;
  if (pool.empty()) return alg.zero();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> nt(1, max_terms);
  std::size_t n = nt(rng);
  for (std::size_t i = 0; i < n; ++i)
    raw.emplace_back(pool[pick(rng)], random_coefficient(alg.ring(), rng));
  return alg.from_raw(std::move(raw));
}

inline AlgebraElement parse(const LeavittPathAlgebra& alg, std::string_view src) {
  return parse_expression(src, alg);
}

}  // namespace lpa::testing
