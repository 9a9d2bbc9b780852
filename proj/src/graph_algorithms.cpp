#include <algorithm>
#include <cstdint>
#include <deque>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"

namespace lpa {

namespace {

void check_universe(const Graph& g, const VertexSet& h) {
  if (h.universe_size() != g.num_vertices())
    throw PreconditionError("vertex set does not belong to this graph");
}

}  // namespace

// VertexSet -------------------------------------------------------------------

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.members_.assign(universe, true);
  return s;
}

VertexSet VertexSet::of(const Graph& g,
                        std::initializer_list<std::string_view> names) {
  VertexSet s(g.num_vertices());
  for (auto n : names) s.insert(g.vertex(n));
  return s;
}

VertexSet VertexSet::of(const Graph& g, const std::vector<std::string>& names) {
  VertexSet s(g.num_vertices());
  for (const auto& n : names) s.insert(g.vertex(n));
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= members_.size())
    throw PreconditionError("vertex " + std::to_string(v) +
                            " is outside the graph");
  members_[v] = true;
}

void VertexSet::erase(VertexId v) {
  if (v < members_.size()) members_[v] = false;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), true));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t v = 0; v < members_.size(); ++v)
    if (members_[v] && !other.contains(v)) return false;
  return true;
}

std::vector<VertexId> VertexSet::elements() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < members_.size(); ++v)
    if (members_[v]) out.push_back(v);
  return out;
}

std::string VertexSet::to_string(const Graph& g) const {
  std::string s = "{";
  bool first = true;
  for (VertexId v : elements()) {
    if (!first) s += ", ";
    s += g.vertex_name(v);
    first = false;
  }
  return s + "}";
}

// Paths -----------------------------------------------------------------------

std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(Path::vertex(v));
  std::size_t layer_begin = 0;
  std::size_t layer_end = out.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (EdgeId e : g.out_edges(out[i].range())) {
        // copy: push_back may reallocate under out[i]
        Path p = out[i];
        out.push_back(p.is_vertex() ? Path::edge(g, e) : p.append(g, e));
      }
    }
    layer_begin = layer_end;
    layer_end = out.size();
    if (layer_begin == layer_end) break;
  }
  return out;
}

std::vector<Path> paths_from(const Graph& g, VertexId from, std::size_t len) {
  std::vector<Path> layer{Path::vertex(from)};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (EdgeId e : g.out_edges(p.range()))
        next.push_back(p.is_vertex() ? Path::edge(g, e) : p.append(g, e));
    layer = std::move(next);
  }
  return layer;
}

// Acyclicity ------------------------------------------------------------------

namespace {

std::optional<std::vector<VertexId>> topological_order(const Graph& g) {
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) ++indeg[g.range(e)];
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<VertexId> order;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (EdgeId e : g.out_edges(v))
      if (--indeg[g.range(e)] == 0) ready.push_back(g.range(e));
  }
  if (order.size() != g.num_vertices()) return std::nullopt;
  return order;
}

}  // namespace

bool is_regular(const Graph& g, VertexId v) { return g.is_regular(v); }

bool is_acyclic(const Graph& g) { return topological_order(g).has_value(); }

std::size_t longest_path_length(const Graph& g) {
  auto order = topological_order(g);
  if (!order) throw PreconditionError("graph has a cycle");
  std::vector<std::size_t> depth(g.num_vertices(), 0);
  std::size_t best = 0;
  // Walk in reverse topological order so ranges are settled first.
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    for (EdgeId e : g.out_edges(*it))
      depth[*it] = std::max(depth[*it], depth[g.range(e)] + 1);
    best = std::max(best, depth[*it]);
  }
  return best;
}

// Hereditary and saturated sets -----------------------------------------------

bool is_hereditary(const Graph& g, const VertexSet& h) {
  check_universe(g, h);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (h.contains(g.source(e)) && !h.contains(g.range(e))) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
  check_universe(g, h);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (h.contains(v) || !g.is_regular(v)) continue;
    auto out = g.out_edges(v);
    bool all_in = std::all_of(out.begin(), out.end(),
                              [&](EdgeId e) { return h.contains(g.range(e)); });
    if (all_in) return false;
  }
  return true;
}

VertexSet tree(const Graph& g, const VertexSet& x) {
  check_universe(g, x);
  VertexSet t = x;
  std::vector<VertexId> stack = x.elements();
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (!t.contains(w)) {
        t.insert(w);
        stack.push_back(w);
      }
    }
  }
  return t;
}

VertexSet closure(const Graph& g, const VertexSet& x) {
  VertexSet current = tree(g, x);
  for (;;) {
    VertexSet next = current;
    for (VertexId y = 0; y < g.num_vertices(); ++y) {
      if (current.contains(y) || !g.is_regular(y)) continue;
      auto out = g.out_edges(y);
      if (std::all_of(out.begin(), out.end(), [&](EdgeId e) {
            return current.contains(g.range(e));
          }))
        next.insert(y);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<VertexSet> all_hereditary_saturated(const Graph& g,
                                                std::size_t bound) {
  const std::size_t n = g.num_vertices();
  if (n > bound || n >= 63)
    throw BoundExceeded("hereditary saturated sweep over " + std::to_string(n) +
                        " vertices exceeds the bound " + std::to_string(bound));
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet h(n);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) h.insert(v);
    if (is_hereditary(g, h) && is_saturated(g, h)) out.push_back(std::move(h));
  }
  return out;
}

std::optional<VertexSet> find_nontrivial_hs(const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexSet single(g.num_vertices());
    single.insert(v);
    VertexSet c = closure(g, single);
    if (!c.is_full()) return c;
  }
  return std::nullopt;
}

bool has_nontrivial_hs(const Graph& g) { return find_nontrivial_hs(g).has_value(); }

// Condition (L) ---------------------------------------------------------------

std::optional<Path> find_exitless_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  auto single_out = [&](VertexId v) { return g.out_edges(v).size() == 1; };
  // 0 = unvisited, 1 = on the current walk, 2 = finished
  std::vector<int> state(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<VertexId> walk;
    VertexId v = start;
    while (single_out(v) && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = g.range(g.out_edges(v).front());
    }
    if (single_out(v) && state[v] == 1) {
      std::vector<EdgeId> edges;
      VertexId w = v;
      do {
        EdgeId e = g.out_edges(w).front();
        edges.push_back(e);
        w = g.range(e);
      } while (w != v);
      return Path::from_edges(g, std::move(edges));
    }
    for (VertexId w : walk) state[w] = 2;
  }
  return std::nullopt;
}

bool condition_L(const Graph& g) { return !find_exitless_cycle(g).has_value(); }

// Brute-force cross-checks ----------------------------------------------------

std::vector<Path> enumerate_simple_cycles(const Graph& g) {
  std::vector<Path> out;
  std::vector<EdgeId> edges;
  std::vector<bool> on_path(g.num_vertices(), false);
  // Cycles through `start` whose other vertices all have larger index.
  auto dfs = [&](auto&& self, VertexId start, VertexId v) -> void {
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (w == start) {
        edges.push_back(e);
        out.push_back(Path::from_edges(g, edges));
        edges.pop_back();
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        edges.push_back(e);
        self(self, start, w);
        edges.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return out;
}

bool condition_L_by_enumeration(const Graph& g) {
  for (const Path& c : enumerate_simple_cycles(g)) {
    bool has_exit = false;
    for (EdgeId e : c.edges())
      if (g.out_edges(g.source(e)).size() >= 2) has_exit = true;
    if (!has_exit) return false;
  }
  return true;
}

VertexSet brute_force_closure(const Graph& g, const VertexSet& x, std::size_t bound) {
  check_universe(g, x);
  std::optional<VertexSet> best;
  const std::vector<VertexSet> candidates = all_hereditary_saturated(g, bound);
  for (const VertexSet& h : candidates) {
    if (!x.is_subset_of(h)) continue;
    if (!best || h.is_subset_of(*best)) best = h;
  }
  // E^0 is always a candidate, so best is set.
  for (const VertexSet& h : candidates)
    if (x.is_subset_of(h) && !best->is_subset_of(h))
      throw Error("hereditary saturated supersets have no least element");
  return *best;
}

// Quotient --------------------------------------------------------------------

Graph quotient_graph(const Graph& g, const VertexSet& h) {
  check_universe(g, h);
  if (!is_hereditary(g, h))
    throw PreconditionError("quotient needs a hereditary set; " +
                            h.to_string(g) + " is not");
  if (!is_saturated(g, h))
    throw PreconditionError("quotient needs a saturated set; " +
                            h.to_string(g) + " is not");
  if (h.is_full())
    throw PreconditionError("quotient by the full vertex set is empty");
  Graph f;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!h.contains(v)) f.add_vertex(g.vertex_name(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (h.contains(ed.range)) continue;
    f.add_edge(ed.name, g.vertex_name(ed.source), g.vertex_name(ed.range));
  }
  return f;
}

}  // namespace lpa
