#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

/// Dense index of a vertex, in insertion order.
using VertexId = std::size_t;
/// Dense index of an edge, in insertion order.
using EdgeId = std::size_t;

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;
};

/// A finite directed graph E = (E^0, E^1, r, s).
///
/// Vertices and edges are named by ASCII words and addressed by dense indices
/// assigned in insertion order, so every iteration over the graph is
/// deterministic. Vertex and edge names live in one namespace.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId range);
  EdgeId add_edge(std::string name, std::string_view source,
                  std::string_view range);

  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  VertexId source(EdgeId e) const { return edge(e).source; }
  VertexId range(EdgeId e) const { return edge(e).range; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  VertexId vertex(std::string_view name) const;
  EdgeId edge_id(std::string_view name) const;

  /// s^{-1}(v) in insertion order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> out_edges(std::string_view v) const {
    return out_edges(vertex(v));
  }

  /// 0 < |s^{-1}(v)|; finiteness is automatic here.
  bool is_regular(VertexId v) const { return !out_edges(v).empty(); }
  bool is_sink(VertexId v) const { return out_edges(v).empty(); }

  /// The first outgoing edge of a regular vertex. It anchors the normal form
  /// of the path algebra: monomials whose real and ghost parts end in the
  /// same special edge are rewritten away.
  std::optional<EdgeId> special_edge(VertexId v) const;

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  bool name_taken(std::string_view name) const;

  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// Reads the line-oriented graph format:
///
///     # comment
///     vertex <id>
///     edge <id> <source> <range>
///
/// Throws ParseError carrying the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// A path of E: either a single vertex (length 0) or a composable edge
/// sequence. Ordered by (length, source, edge sequence).
class Path {
 public:
  static Path vertex(VertexId v) { return Path(v, v, {}); }
  static Path edge(const Graph& g, EdgeId e);
  /// Validates composability; throws PreconditionError otherwise.
  static Path from_edges(const Graph& g, std::vector<EdgeId> edges);

  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::optional<EdgeId> last_edge() const {
    if (edges_.empty()) return std::nullopt;
    return edges_.back();
  }

  /// True iff `other` = this · q for some path q.
  bool is_prefix_of(const Path& other) const;
  /// Returns q with `*this` = prefix · q. Requires prefix.is_prefix_of(*this).
  Path strip_prefix(const Path& prefix) const;
  Path append(const Graph& g, EdgeId e) const;
  Path drop_last(const Graph& g) const;

  std::string to_string(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend Path concat(const Path& p, const Path& q);

 private:
  Path(VertexId s, VertexId r, std::vector<EdgeId> edges)
      : source_(s), range_(r), edges_(std::move(edges)) {}

  VertexId source_;
  VertexId range_;
  std::vector<EdgeId> edges_;
};

/// Throws PreconditionError unless r(p) = s(q).
Path concat(const Path& p, const Path& q);

/// All paths of length <= max_len: vertices first, then by length, then in
/// lexicographic edge order.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len);
/// Paths of exactly `len` edges starting at `from`.
std::vector<Path> paths_from(const Graph& g, VertexId from, std::size_t len);

/// Subset of the vertices of a particular graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : members_(universe, false) {}
  static VertexSet full(std::size_t universe);
  static VertexSet of(const Graph& g, std::initializer_list<std::string_view> names);
  static VertexSet of(const Graph& g, const std::vector<std::string>& names);

  std::size_t universe_size() const noexcept { return members_.size(); }
  bool contains(VertexId v) const { return v < members_.size() && members_[v]; }
  void insert(VertexId v);
  void erase(VertexId v);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == members_.size(); }
  bool is_subset_of(const VertexSet& other) const;
  std::vector<VertexId> elements() const;

  /// "{v, w}" using vertex names, in insertion order of the graph.
  std::string to_string(const Graph& g) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> members_;
};

bool is_regular(const Graph& g, VertexId v);
bool is_acyclic(const Graph& g);
/// Length of the longest path; requires an acyclic graph.
std::size_t longest_path_length(const Graph& g);

bool is_hereditary(const Graph& g, const VertexSet& h);
bool is_saturated(const Graph& g, const VertexSet& h);

/// T(X): every vertex reachable from X, X included.
VertexSet tree(const Graph& g, const VertexSet& x);
/// Smallest hereditary saturated superset of X, built as X_0 = T(X) followed
/// by the saturation steps X_n until nothing changes.
VertexSet closure(const Graph& g, const VertexSet& x);

inline constexpr std::size_t kDefaultSubsetBound = 16;

/// Every hereditary saturated subset, ordered by bitmask of insertion indices.
/// Throws BoundExceeded when |E^0| > bound.
std::vector<VertexSet> all_hereditary_saturated(
    const Graph& g, std::size_t bound = kDefaultSubsetBound);

/// A nonempty proper hereditary saturated subset, if one exists. Any such H
/// containing v contains closure({v}), so it suffices to look at singleton
/// closures.
std::optional<VertexSet> find_nontrivial_hs(const Graph& g);
bool has_nontrivial_hs(const Graph& g);

/// A cycle without an exit, if any. Such a cycle lives entirely on vertices
/// of out-degree exactly one, so we look for a cycle in that functional
/// subgraph.
std::optional<Path> find_exitless_cycle(const Graph& g);
/// Condition (L): every cycle has an exit.
bool condition_L(const Graph& g);

/// Brute-force cross-checks ----------------------------------------------------

/// Every simple cycle (no repeated vertex), once, rotated to start at its
/// smallest vertex. Exponential; meant for small graphs.
std::vector<Path> enumerate_simple_cycles(const Graph& g);
/// Condition (L) by checking each simple cycle for a vertex of out-degree >= 2.
bool condition_L_by_enumeration(const Graph& g);
/// The inclusion-minimal hereditary saturated superset of X found by sweeping
/// all subsets. Throws BoundExceeded when |E^0| > bound.
VertexSet brute_force_closure(const Graph& g, const VertexSet& x,
                              std::size_t bound = kDefaultSubsetBound);

/// F^0 = E^0 \ H, F^1 = { e : r(e) not in H }. Names are preserved.
/// H must be hereditary, saturated and proper.
Graph quotient_graph(const Graph& g, const VertexSet& h);

}  // namespace lpa
