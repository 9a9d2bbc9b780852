#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa {

/// Why L_R(E) fails to be (graded) simple. Each reason carries a witness that
/// can be checked independently.
struct SimplicityReason {
  enum class Kind { kRingNotSimple, kNontrivialHereditarySaturated, kExitlessCycle };

  Kind kind;
  std::optional<VertexSet> subset;  // kNontrivialHereditarySaturated
  std::optional<Path> cycle;        // kExitlessCycle

  std::string name() const;
  std::string witness(const Graph& g, const Ring& r) const;
};

struct GradedSimplicity {
  bool graded_simple = false;
  std::vector<SimplicityReason> reasons;
};

struct SimplicityVerdict {
  bool ring_simple = false;
  bool no_nontrivial_hs = false;
  bool condition_l = false;
  bool graded_simple = false;
  bool simple = false;
  std::vector<SimplicityReason> reasons;
};

/// R simple and no nontrivial hereditary saturated subset.
GradedSimplicity is_graded_simple(const Graph& g, const Ring& r);
/// Graded simple and every cycle has an exit.
SimplicityVerdict is_simple(const Graph& g, const Ring& r);

/// The graded homomorphism L_R(E) -> L_R(F) onto the quotient graph by a
/// proper hereditary saturated H: vertices in H and (ghost) edges ranging in
/// H go to zero, everything else to itself.
class QuotientMap {
 public:
  QuotientMap(const LeavittPathAlgebra& source, const VertexSet& h);

  const LeavittPathAlgebra& target() const { return target_; }
  AlgebraElement operator()(const AlgebraElement& x) const;

 private:
  std::shared_ptr<const Graph> source_graph_;
  LeavittPathAlgebra target_;
  std::vector<std::optional<VertexId>> vertex_map_;
  std::vector<std::optional<EdgeId>> edge_map_;
};

AlgebraElement quotient_hom(const AlgebraElement& x, const VertexSet& h);

/// alpha^* a beta = k v with k nonzero.
struct DegreeZeroCertificate {
  Path alpha;
  Path beta;
  VertexId vertex;
  RingElement k;
};

inline constexpr std::size_t kDefaultReductionSlack = 2;

/// Breadth-first search over path pairs, shortest first, with |alpha| up to
/// the real degree of `a` plus `slack` and |beta| up to its ghost degree plus
/// `slack`. Every certificate returned has been re-verified. Running out of
/// candidates raises BoundExceeded; that is inconclusive, not a proof that no
/// certificate exists.
DegreeZeroCertificate reduce_degree_zero(const AlgebraElement& a,
                                         std::size_t slack = kDefaultReductionSlack);
bool verify_certificate(const AlgebraElement& a, const DegreeZeroCertificate& c);

/// ghost path alpha^* as an element.
AlgebraElement ghost_path(const LeavittPathAlgebra& alg, const Path& p);
/// real path as an element.
AlgebraElement real_path(const LeavittPathAlgebra& alg, const Path& p);

struct CentralityCheck {
  bool central = true;
  /// Complete check: acyclic graph with bound >= longest path. Otherwise a
  /// `true` is bounded evidence while a `false` is definitive.
  bool exact = false;
  std::optional<AlgebraElement> against;
  std::optional<AlgebraElement> commutator;

  explicit operator bool() const { return central; }
};

/// Whether x (an element of the corner u L u) commutes with r u for the ring
/// generators, the center basis and a few seeded random r, and with every
/// normal gamma delta^* with s(gamma) = s(delta) = u and |gamma|, |delta| <= bound.
CentralityCheck is_central_in_corner(const AlgebraElement& x, VertexId u,
                                     std::size_t bound, std::uint64_t seed = 1);

struct CenterDescription {
  enum class Kind { kZero, kCentralScalars };
  Kind kind = Kind::kCentralScalars;
  std::vector<AlgebraElement> basis;
};

/// Z(L_R(E)) = Z(R) * 1 for a simple algebra over a finite graph. Refuses
/// (PreconditionError) when the algebra is not simple. Each basis element is
/// checked against every generator before it is returned.
CenterDescription center(const LeavittPathAlgebra& alg);

// Finite-dimensional oracles --------------------------------------------------

inline constexpr std::size_t kDefaultOracleDim = 400;

/// Exact linear model of L_K(E) for an acyclic graph over a field K, on the
/// normal-form basis. Used by the brute-force oracles; shares only the
/// monomial multiplication with the symbolic engine.
class FiniteModel {
 public:
  using Vector = std::vector<Rational>;

  FiniteModel(const LeavittPathAlgebra& alg, std::size_t max_dim = kDefaultOracleDim);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const LeavittPathAlgebra& algebra() const { return alg_; }

  Vector coordinates(const AlgebraElement& x) const;
  AlgebraElement element(const Vector& v) const;

  /// Dimension of the two-sided ideal generated by v, closing the span under
  /// left and right multiplication by the generators.
  std::size_t ideal_dim(const Vector& v) const;
  /// Ideal dimension of the basis vector e_i inside the corner f A f, where f
  /// is the sum of `corner_vertices`; multiplication by the corner's basis.
  std::size_t corner_ideal_dim(std::size_t i, const VertexSet& corner_vertices) const;
  /// Basis of { x : x g = g x for every generator g }.
  std::vector<Vector> commutant() const;

  /// Subspace helpers over K.
  std::size_t rank(const std::vector<Vector>& vs) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;

  Vector apply(const std::vector<Sparse>& action, const Vector& v) const;
  /// ideal_dim computed over F_p; nullopt when p divides a denominator of v.
  std::optional<std::size_t> modular_ideal_dim(const Vector& v, std::uint64_t p) const;
  const std::vector<Sparse>& product_row(std::size_t i) const;

  LeavittPathAlgebra alg_;
  std::uint64_t p_;  // 0 for Q
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  // left_[g][i] = coordinates of gen_g * b_i, right_[g][i] = of b_i * gen_g
  std::vector<std::vector<Sparse>> left_;
  std::vector<std::vector<Sparse>> right_;
  // table_[i][j] = coordinates of b_i * b_j, filled on demand
  mutable std::vector<std::optional<std::vector<Sparse>>> table_;

};

/// Every basis monomial generates the whole algebra as a two-sided ideal.
/// Requires an acyclic graph, a field and dimension <= max_dim.
bool bruteforce_simplicity_oracle(const LeavittPathAlgebra& alg,
                                  std::size_t max_dim = kDefaultOracleDim);
/// Basis of the center, by solving the commutant system.
std::vector<AlgebraElement> bruteforce_center_oracle(
    const LeavittPathAlgebra& alg, std::size_t max_dim = kDefaultOracleDim);

struct CornerTransfer {
  bool algebra_simple = false;
  bool all_corners_simple = false;
  bool equivalence_holds = false;
  /// Vertex sets F whose corner (sum F) A (sum F) is not simple.
  std::vector<VertexSet> non_simple_corners;
};

inline constexpr std::size_t kMaxCornerVertices = 10;

/// Compares simplicity of A with simplicity of every corner f A f over the
/// local units f = sum of a nonempty vertex set.
CornerTransfer corner_simplicity_transfer_check(
    const LeavittPathAlgebra& alg, std::size_t max_dim = kDefaultOracleDim);

}  // namespace lpa
