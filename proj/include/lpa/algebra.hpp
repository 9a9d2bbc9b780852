#pragma once

#include <compare>
#include <map>
#include <optional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa {

/// alpha beta^*, with the ghost part stored un-starred. Only built when
/// r(alpha) = r(beta); otherwise the product is zero.
class Monomial {
 public:
  /// Throws PreconditionError when r(real) != r(ghost).
  Monomial(Path real, Path ghost);
  static Monomial vertex(VertexId v) {
    return Monomial(Path::vertex(v), Path::vertex(v));
  }

  const Path& real() const noexcept { return real_; }
  const Path& ghost() const noexcept { return ghost_; }
  int degree() const {
    return static_cast<int>(real_.length()) - static_cast<int>(ghost_.length());
  }
  VertexId real_source() const { return real_.source(); }
  VertexId ghost_source() const { return ghost_.source(); }
  bool is_vertex() const { return real_.is_vertex() && ghost_.is_vertex(); }

  /// "a.b|b", "u", "e", "w|e", in the expression grammar.
  std::string to_string(const Graph& g) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Total length first, then real part, then ghost part.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Path real_;
  Path ghost_;
};

/// Not both parts end in the same special edge.
bool is_normal(const Graph& g, const Monomial& m);

/// (alpha beta^*)(gamma delta^*) before any CK2 rewriting; nullopt for zero.
std::optional<Monomial> monomial_product(const Monomial& x, const Monomial& y);

using RawSum = std::vector<std::pair<Monomial, RingElement>>;

/// Element of L_R(E) in normal form: a map from normal monomials to nonzero
/// left coefficients. Because R commutes with the generators, left storage
/// loses nothing for noncommutative R. Two elements are equal iff their maps
/// are identical.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, RingElement>;

  AlgebraElement(std::shared_ptr<const Graph> graph, Ring ring)
      : graph_(std::move(graph)), ring_(ring) {}

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a normal monomial (zero if absent).
  RingElement coefficient(const Monomial& m) const;

  /// Degrees with a nonzero homogeneous component.
  std::set<int> support() const;
  bool is_homogeneous() const { return support().size() <= 1; }
  /// Longest real / ghost part in the normal form.
  std::size_t real_degree() const;
  std::size_t ghost_degree() const;

  std::string to_string() const;

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const RingElement& c, const AlgebraElement& x);

  /// False for elements of different algebras.
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

  bool same_parent(const AlgebraElement& other) const;

 private:
  friend AlgebraElement normalize(std::shared_ptr<const Graph>, const Ring&, RawSum);

  std::shared_ptr<const Graph> graph_;
  Ring ring_;
  Terms terms_;
};

/// CK2 rewriting to normal form. A monomial alpha' e (beta' e)^* whose parts
/// end in the special edge e of v = s(e) becomes
///   alpha' beta'^* - sum_{f in s^{-1}(v), f != e} alpha' f (beta' f)^*.
/// The first summand is shorter and the others are normal at the tail, so the
/// rewriting terminates. Like terms are collected and zeros dropped.
AlgebraElement normalize(std::shared_ptr<const Graph> graph, const Ring& ring,
                         RawSum raw);

/// The product before re-normalization: every pairwise monomial product.
RawSum mul_raw(const RawSum& x, const RawSum& y);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scalar_mul(const RingElement& c, const AlgebraElement& x);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);

struct Generator {
  enum class Kind { kVertex, kEdge, kGhost };
  Kind kind;
  std::size_t index;
};

AlgebraElement from_generator(std::shared_ptr<const Graph> graph, const Ring& ring,
                              Generator gen);

/// Homogeneous components keyed by degree |alpha| - |beta|.
struct GradedDecomposition {
  std::map<int, AlgebraElement> components;

  std::set<int> support() const;
};

GradedDecomposition decompose(const AlgebraElement& x);

/// lambda alpha beta^* |-> lambda beta alpha^*, extended additively.
AlgebraElement involution(const AlgebraElement& x);

/// u x u: the monomials with s(alpha) = s(beta) = u.
AlgebraElement corner(const AlgebraElement& x, VertexId u);

/// Sum of the vertices that occur as sources of real or ghost parts.
AlgebraElement local_unit_for(const std::vector<AlgebraElement>& xs);

/// Normal monomials whose parts have length <= max_len, in monomial order.
std::vector<Monomial> normal_monomials(const Graph& g, std::size_t max_len);
/// The full normal-form basis of an acyclic graph's algebra.
std::vector<Monomial> normal_basis(const Graph& g);

/// L_R(E) for a fixed graph and ring: convenience constructors for elements.
class LeavittPathAlgebra {
 public:
  LeavittPathAlgebra(Graph g, Ring r)
      : graph_(std::make_shared<const Graph>(std::move(g))), ring_(r) {}
  LeavittPathAlgebra(std::shared_ptr<const Graph> g, Ring r)
      : graph_(std::move(g)), ring_(r) {}

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Ring& ring() const { return ring_; }

  AlgebraElement zero() const { return AlgebraElement(graph_, ring_); }
  /// Sum of all vertices.
  AlgebraElement one() const;
  AlgebraElement scalar(const RingElement& c) const { return c * one(); }

  AlgebraElement vertex(VertexId v) const;
  AlgebraElement vertex(std::string_view name) const {
    return vertex(graph_->vertex(name));
  }
  AlgebraElement edge(EdgeId e) const;
  AlgebraElement edge(std::string_view name) const {
    return edge(graph_->edge_id(name));
  }
  AlgebraElement ghost(EdgeId e) const;
  AlgebraElement ghost(std::string_view name) const {
    return ghost(graph_->edge_id(name));
  }
  AlgebraElement generator(Generator gen) const;
  /// Vertices, then edges, then ghost edges.
  std::vector<Generator> generators() const;

  /// c * real * ghost^*, normalized; zero when the ranges differ.
  AlgebraElement monomial(const Path& real, const Path& ghost,
                          const RingElement& c) const;
  AlgebraElement monomial(const Monomial& m) const {
    return monomial(m.real(), m.ghost(), ring_.one());
  }
  AlgebraElement from_raw(RawSum raw) const {
    return normalize(graph_, ring_, std::move(raw));
  }

 private:
  std::shared_ptr<const Graph> graph_;
  Ring ring_;
};

}  // namespace lpa
