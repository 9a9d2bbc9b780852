#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

// Graph -----------------------------------------------------------------------

bool Graph::name_taken(std::string_view name) const {
  std::string key(name);
  return vertex_index_.count(key) || edge_index_.count(key);
}

VertexId Graph::add_vertex(std::string name) {
  if (!valid_id(name))
    throw PreconditionError("invalid vertex id '" + name + "'");
  if (name_taken(name)) throw PreconditionError("duplicate id '" + name + "'");
  VertexId v = vertex_names_.size();
  vertex_index_.emplace(name, v);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  return v;
}

EdgeId Graph::add_edge(std::string name, VertexId source, VertexId range) {
  check_vertex(source);
  check_vertex(range);
  if (!valid_id(name))
    throw PreconditionError("invalid edge id '" + name + "'");
  if (name_taken(name)) throw PreconditionError("duplicate id '" + name + "'");
  EdgeId e = edges_.size();
  edge_index_.emplace(name, e);
  edges_.push_back(Edge{std::move(name), source, range});
  out_[source].push_back(e);
  return e;
}

EdgeId Graph::add_edge(std::string name, std::string_view source,
                       std::string_view range) {
  return add_edge(std::move(name), vertex(source), vertex(range));
}

const std::string& Graph::vertex_name(VertexId v) const {
  check_vertex(v);
  return vertex_names_[v];
}

const Edge& Graph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

EdgeId Graph::edge_id(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw PreconditionError("unknown edge '" + std::string(name) + "'");
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::optional<EdgeId> Graph::special_edge(VertexId v) const {
  check_vertex(v);
  if (out_[v].empty()) return std::nullopt;
  return out_[v].front();
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_names_.size())
    throw PreconditionError("unknown vertex index " + std::to_string(v));
}

void Graph::check_edge(EdgeId e) const {
  if (e >= edges_.size())
    throw PreconditionError("unknown edge index " + std::to_string(e));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_names_ != b.vertex_names_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.name != y.name || x.source != y.source || x.range != y.range)
      return false;
  }
  return true;
}

// File format -----------------------------------------------------------------

Graph parse_graph(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(std::move(w));
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg, lineno, 0);
    };
    if (tok[0] == "vertex") {
      if (tok.size() != 2) fail("expected 'vertex <id>'");
      if (!valid_id(tok[1])) fail("invalid id '" + tok[1] + "'");
      if (g.find_vertex(tok[1]) || g.find_edge(tok[1]))
        fail("duplicate id '" + tok[1] + "'");
      g.add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) fail("expected 'edge <id> <source> <range>'");
      if (!valid_id(tok[1])) fail("invalid id '" + tok[1] + "'");
      if (g.find_vertex(tok[1]) || g.find_edge(tok[1]))
        fail("duplicate id '" + tok[1] + "'");
      auto s = g.find_vertex(tok[2]);
      if (!s) fail("edge '" + tok[1] + "' has dangling source '" + tok[2] + "'");
      auto r = g.find_vertex(tok[3]);
      if (!r) fail("edge '" + tok[1] + "' has dangling range '" + tok[3] + "'");
      g.add_edge(tok[1], *s, *r);
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (g.num_vertices() == 0)
    throw ParseError("graph has no vertices", lineno, 0);
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    out << "vertex " << g.vertex_name(v) << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out << "edge " << ed.name << ' ' << g.vertex_name(ed.source) << ' '
        << g.vertex_name(ed.range) << '\n';
  }
}

// Path ------------------------------------------------------------------------

Path Path::edge(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return Path(ed.source, ed.range, {e});
}

Path Path::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty())
    throw PreconditionError("a path needs at least one edge or a base vertex");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.range(edges[i]) != g.source(edges[i + 1]))
      throw PreconditionError("edges '" + g.edge(edges[i]).name + "' and '" +
                              g.edge(edges[i + 1]).name + "' do not compose");
  }
  VertexId s = g.source(edges.front());
  VertexId r = g.range(edges.back());
  return Path(s, r, std::move(edges));
}

bool Path::is_prefix_of(const Path& other) const {
  if (source_ != other.source_ || edges_.size() > other.edges_.size())
    return false;
  return std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

Path Path::strip_prefix(const Path& prefix) const {
  if (!prefix.is_prefix_of(*this))
    throw PreconditionError("path is not a prefix");
  std::vector<EdgeId> rest(edges_.begin() + prefix.length(), edges_.end());
  return Path(prefix.range_, range_, std::move(rest));
}

Path Path::append(const Graph& g, EdgeId e) const {
  const Edge& ed = g.edge(e);
  if (ed.source != range_)
    throw PreconditionError("edge '" + ed.name + "' does not start at the path's range");
  std::vector<EdgeId> edges = edges_;
  edges.push_back(e);
  return Path(source_, ed.range, std::move(edges));
}

Path Path::drop_last(const Graph& g) const {
  if (edges_.empty()) throw PreconditionError("cannot shorten a vertex path");
  std::vector<EdgeId> edges(edges_.begin(), edges_.end() - 1);
  return Path(source_, g.source(edges_.back()), std::move(edges));
}

std::string Path::to_string(const Graph& g) const {
  if (edges_.empty()) return g.vertex_name(source_);
  std::string s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += '.';
    s += g.edge(edges_[i]).name;
  }
  return s;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.edges_.size() <=> b.edges_.size(); c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return a.edges_ <=> b.edges_;
}

Path concat(const Path& p, const Path& q) {
  if (p.range() != q.source())
    throw PreconditionError("cannot concatenate: range of the first path is not "
                            "the source of the second");
  std::vector<EdgeId> edges = p.edges_;
  edges.insert(edges.end(), q.edges_.begin(), q.edges_.end());
  return Path(p.source_, q.range_, std::move(edges));
}

}  // namespace lpa
