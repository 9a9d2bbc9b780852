#include "lpa/algebra.hpp"

#include <algorithm>

#include "lpa/errors.hpp"

namespace lpa {

// Monomial --------------------------------------------------------------------

Monomial::Monomial(Path real, Path ghost)
    : real_(std::move(real)), ghost_(std::move(ghost)) {
  if (real_.range() != ghost_.range())
    throw PreconditionError("malformed monomial: real and ghost parts end at "
                            "different vertices");
}

std::string Monomial::to_string(const Graph& g) const {
  if (ghost_.is_vertex()) return real_.to_string(g);
  return real_.to_string(g) + "|" + ghost_.to_string(g);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto la = a.real_.length() + a.ghost_.length();
  auto lb = b.real_.length() + b.ghost_.length();
  if (auto c = la <=> lb; c != 0) return c;
  if (auto c = a.real_ <=> b.real_; c != 0) return c;
  return a.ghost_ <=> b.ghost_;
}

bool is_normal(const Graph& g, const Monomial& m) {
  auto a = m.real().last_edge();
  auto b = m.ghost().last_edge();
  if (!a || !b || *a != *b) return true;
  return g.special_edge(g.source(*a)) != a;
}

std::optional<Monomial> monomial_product(const Monomial& x, const Monomial& y) {
  // (alpha beta^*)(gamma delta^*)
  const Path& beta = x.ghost();
  const Path& gamma = y.real();
  if (beta.is_prefix_of(gamma))
    return Monomial(concat(x.real(), gamma.strip_prefix(beta)), y.ghost());
  if (gamma.is_prefix_of(beta))
    return Monomial(x.real(), concat(y.ghost(), beta.strip_prefix(gamma)));
  return std::nullopt;
}

// Normal form -----------------------------------------------------------------

AlgebraElement normalize(std::shared_ptr<const Graph> graph, const Ring& ring,
                         RawSum raw) {
  AlgebraElement out(graph, ring);
  const Graph& g = *graph;
  auto& terms = out.terms_;
  while (!raw.empty()) {
    auto [m, c] = std::move(raw.back());
    raw.pop_back();
    if (!(c.ring() == ring))
      throw PreconditionError("coefficient from " + c.ring().display_name() +
                              " in an element over " + ring.display_name());
    if (c.is_zero()) continue;
    if (m.real().source() >= g.num_vertices() ||
        m.ghost().source() >= g.num_vertices())
      throw PreconditionError("malformed monomial: vertex outside the graph");
    if (is_normal(g, m)) {
      auto [it, inserted] = terms.try_emplace(m, c);
      if (!inserted) it->second += c;
      continue;
    }
    EdgeId special = *m.real().last_edge();
    Path real = m.real().drop_last(g);
    Path ghost = m.ghost().drop_last(g);
    for (EdgeId f : g.out_edges(g.source(special))) {
      if (f == special) continue;
      raw.emplace_back(Monomial(real.is_vertex() ? Path::edge(g, f) : real.append(g, f),
                                ghost.is_vertex() ? Path::edge(g, f) : ghost.append(g, f)),
                       -c);
    }
    raw.emplace_back(Monomial(std::move(real), std::move(ghost)), std::move(c));
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

RawSum mul_raw(const RawSum& x, const RawSum& y) {
  RawSum out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y)
      if (auto m = monomial_product(mx, my)) out.emplace_back(std::move(*m), cx * cy);
  return out;
}

// AlgebraElement --------------------------------------------------------------

namespace {

void require_same(const AlgebraElement& x, const AlgebraElement& y) {
  if (!x.same_parent(y))
    throw PreconditionError("elements belong to different Leavitt path algebras");
}

RawSum to_raw(const AlgebraElement& x) {
  return RawSum(x.terms().begin(), x.terms().end());
}

}  // namespace

bool AlgebraElement::same_parent(const AlgebraElement& other) const {
  if (!(ring_ == other.ring_)) return false;
  return graph_ == other.graph_ || *graph_ == *other.graph_;
}

RingElement AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring_.zero() : it->second;
}

std::set<int> AlgebraElement::support() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_) s.insert(m.degree());
  return s;
}

std::size_t AlgebraElement::real_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.real().length());
  return d;
}

std::size_t AlgebraElement::ghost_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.ghost().length());
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    RingElement coeff = c;
    if (coeff.is_negative()) {
      s += first ? "-" : " - ";
      coeff = -coeff;
    } else if (!first) {
      s += " + ";
    }
    if (!coeff.is_one()) s += coeff.to_string() + " * ";
    s += m.to_string(*graph_);
    first = false;
  }
  return s;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(graph_, ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  AlgebraElement out = x;
  for (const auto& [m, c] : y.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  return x + (-y);
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  return normalize(x.graph_, x.ring_, mul_raw(to_raw(x), to_raw(y)));
}

AlgebraElement operator*(const RingElement& c, const AlgebraElement& x) {
  if (!(c.ring() == x.ring_))
    throw PreconditionError("scalar from " + c.ring().display_name() +
                            " applied to an element over " +
                            x.ring_.display_name());
  AlgebraElement out(x.graph_, x.ring_);
  for (const auto& [m, coeff] : x.terms_) {
    RingElement p = c * coeff;
    if (!p.is_zero()) out.terms_.emplace(m, std::move(p));
  }
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.same_parent(y) && x.terms_ == y.terms_;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }

AlgebraElement scalar_mul(const RingElement& c, const AlgebraElement& x) {
  return c * x;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AlgebraElement from_generator(std::shared_ptr<const Graph> graph, const Ring& ring,
                              Generator gen) {
  return LeavittPathAlgebra(std::move(graph), ring).generator(gen);
}

// Grading, involution, corners ------------------------------------------------

std::set<int> GradedDecomposition::support() const {
  std::set<int> s;
  for (const auto& [d, x] : components)
    if (!x.is_zero()) s.insert(d);
  return s;
}

GradedDecomposition decompose(const AlgebraElement& x) {
  GradedDecomposition out;
  for (const auto& [m, c] : x.terms()) {
    auto it = out.components.try_emplace(m.degree(), x.graph_ptr(), x.ring()).first;
    it->second = it->second + LeavittPathAlgebra(x.graph_ptr(), x.ring()).monomial(
                                  m.real(), m.ghost(), c);
  }
  return out;
}

AlgebraElement involution(const AlgebraElement& x) {
  // Swapping the parts keeps a monomial normal, so no rewriting is needed.
  RawSum raw;
  for (const auto& [m, c] : x.terms()) raw.emplace_back(Monomial(m.ghost(), m.real()), c);
  return normalize(x.graph_ptr(), x.ring(), std::move(raw));
}

AlgebraElement corner(const AlgebraElement& x, VertexId u) {
  x.graph().check_vertex(u);
  RawSum raw;
  for (const auto& [m, c] : x.terms())
    if (m.real_source() == u && m.ghost_source() == u) raw.emplace_back(m, c);
  return normalize(x.graph_ptr(), x.ring(), std::move(raw));
}

AlgebraElement local_unit_for(const std::vector<AlgebraElement>& xs) {
  if (xs.empty()) throw PreconditionError("local_unit_for needs at least one element");
  for (const auto& x : xs) require_same(xs.front(), x);
  std::set<VertexId> vertices;
  for (const auto& x : xs)
    for (const auto& [m, c] : x.terms()) {
      vertices.insert(m.real_source());
      vertices.insert(m.ghost_source());
    }
  LeavittPathAlgebra alg(xs.front().graph_ptr(), xs.front().ring());
  AlgebraElement e = alg.zero();
  for (VertexId v : vertices) e = e + alg.vertex(v);
  return e;
}

// Bases -----------------------------------------------------------------------

std::vector<Monomial> normal_monomials(const Graph& g, std::size_t max_len) {
  std::vector<Path> paths = enumerate_paths(g, max_len);
  std::vector<std::vector<const Path*>> by_range(g.num_vertices());
  for (const Path& p : paths) by_range[p.range()].push_back(&p);
  std::vector<Monomial> out;
  for (const auto& group : by_range)
    for (const Path* a : group)
      for (const Path* b : group) {
        Monomial m(*a, *b);
        if (is_normal(g, m)) out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> normal_basis(const Graph& g) {
  if (!is_acyclic(g))
    throw PreconditionError("the algebra of a graph with cycles is infinite "
                            "dimensional; no finite basis");
  return normal_monomials(g, longest_path_length(g));
}

// LeavittPathAlgebra ----------------------------------------------------------

AlgebraElement LeavittPathAlgebra::one() const {
  RawSum raw;
  for (VertexId v = 0; v < graph_->num_vertices(); ++v)
    raw.emplace_back(Monomial::vertex(v), ring_.one());
  return from_raw(std::move(raw));
}

AlgebraElement LeavittPathAlgebra::vertex(VertexId v) const {
  graph_->check_vertex(v);
  return from_raw({{Monomial::vertex(v), ring_.one()}});
}

AlgebraElement LeavittPathAlgebra::edge(EdgeId e) const {
  Path p = Path::edge(*graph_, e);
  return from_raw({{Monomial(p, Path::vertex(p.range())), ring_.one()}});
}

AlgebraElement LeavittPathAlgebra::ghost(EdgeId e) const {
  Path p = Path::edge(*graph_, e);
  return from_raw({{Monomial(Path::vertex(p.range()), p), ring_.one()}});
}

AlgebraElement LeavittPathAlgebra::generator(Generator gen) const {
  switch (gen.kind) {
    case Generator::Kind::kVertex: return vertex(gen.index);
    case Generator::Kind::kEdge: return edge(gen.index);
    case Generator::Kind::kGhost: return ghost(gen.index);
  }
  throw PreconditionError("unknown generator kind");
}

std::vector<Generator> LeavittPathAlgebra::generators() const {
  std::vector<Generator> out;
  for (VertexId v = 0; v < graph_->num_vertices(); ++v)
    out.push_back({Generator::Kind::kVertex, v});
  for (EdgeId e = 0; e < graph_->num_edges(); ++e)
    out.push_back({Generator::Kind::kEdge, e});
  for (EdgeId e = 0; e < graph_->num_edges(); ++e)
    out.push_back({Generator::Kind::kGhost, e});
  return out;
}

AlgebraElement LeavittPathAlgebra::monomial(const Path& real, const Path& ghost,
                                            const RingElement& c) const {
  if (real.range() != ghost.range()) return zero();
  return from_raw({{Monomial(real, ghost), c}});
}

}  // namespace lpa
