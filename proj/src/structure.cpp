#include "lpa/structure.hpp"

#include <random>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa {

// Simplicity ------------------------------------------------------------------

std::string SimplicityReason::name() const {
  switch (kind) {
    case Kind::kRingNotSimple: return "ring-not-simple";
    case Kind::kNontrivialHereditarySaturated: return "nontrivial-hs-subset";
    case Kind::kExitlessCycle: return "exitless-cycle";
  }
  return "?";
}

std::string SimplicityReason::witness(const Graph& g, const Ring& r) const {
  switch (kind) {
    case Kind::kRingNotSimple: return r.display_name();
    case Kind::kNontrivialHereditarySaturated: return subset->to_string(g);
    case Kind::kExitlessCycle: return cycle->to_string(g);
  }
  return "";
}

GradedSimplicity is_graded_simple(const Graph& g, const Ring& r) {
  GradedSimplicity out;
  if (!r.is_simple())
    out.reasons.push_back({SimplicityReason::Kind::kRingNotSimple, {}, {}});
  if (auto h = find_nontrivial_hs(g))
    out.reasons.push_back(
        {SimplicityReason::Kind::kNontrivialHereditarySaturated, std::move(h), {}});
  out.graded_simple = out.reasons.empty();
  return out;
}

SimplicityVerdict is_simple(const Graph& g, const Ring& r) {
  SimplicityVerdict v;
  GradedSimplicity graded = is_graded_simple(g, r);
  v.graded_simple = graded.graded_simple;
  v.reasons = std::move(graded.reasons);
  v.ring_simple = r.is_simple();
  v.no_nontrivial_hs = true;
  for (const auto& reason : v.reasons)
    if (reason.kind == SimplicityReason::Kind::kNontrivialHereditarySaturated)
      v.no_nontrivial_hs = false;
  auto cycle = find_exitless_cycle(g);
  v.condition_l = !cycle.has_value();
  if (cycle)
    v.reasons.push_back({SimplicityReason::Kind::kExitlessCycle, {}, std::move(cycle)});
  v.simple = v.reasons.empty();
  return v;
}

// Quotient homomorphism -------------------------------------------------------

QuotientMap::QuotientMap(const LeavittPathAlgebra& source, const VertexSet& h)
    : source_graph_(source.graph_ptr()),
      target_(quotient_graph(source.graph(), h), source.ring()) {
  const Graph& g = source.graph();
  const Graph& f = target_.graph();
  vertex_map_.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!h.contains(v)) vertex_map_[v] = f.vertex(g.vertex_name(v));
  edge_map_.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!h.contains(g.range(e))) edge_map_[e] = f.edge_id(g.edge(e).name);
}

AlgebraElement QuotientMap::operator()(const AlgebraElement& x) const {
  if (!(x.ring() == target_.ring()) || !(x.graph() == *source_graph_))
    throw PreconditionError("element does not belong to the source algebra");
  const Graph& f = target_.graph();
  auto map_path = [&](const Path& p) -> std::optional<Path> {
    auto base = vertex_map_[p.source()];
    if (!base) return std::nullopt;
    if (p.is_vertex()) return Path::vertex(*base);
    std::vector<EdgeId> edges;
    for (EdgeId e : p.edges()) {
      if (!edge_map_[e]) return std::nullopt;
      edges.push_back(*edge_map_[e]);
    }
    return Path::from_edges(f, std::move(edges));
  };
  RawSum raw;
  for (const auto& [m, c] : x.terms()) {
    auto real = map_path(m.real());
    auto ghost = map_path(m.ghost());
    if (real && ghost) raw.emplace_back(Monomial(*real, *ghost), c);
  }
  return target_.from_raw(std::move(raw));
}

AlgebraElement quotient_hom(const AlgebraElement& x, const VertexSet& h) {
  return QuotientMap(LeavittPathAlgebra(x.graph_ptr(), x.ring()), h)(x);
}

// Degree-zero reduction -------------------------------------------------------

AlgebraElement ghost_path(const LeavittPathAlgebra& alg, const Path& p) {
  return alg.monomial(Path::vertex(p.range()), p, alg.ring().one());
}

AlgebraElement real_path(const LeavittPathAlgebra& alg, const Path& p) {
  return alg.monomial(p, Path::vertex(p.range()), alg.ring().one());
}

namespace {

// k v for a single vertex monomial with nonzero k.
std::optional<std::pair<VertexId, RingElement>> as_scaled_vertex(const AlgebraElement& x) {
  if (x.size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms().begin();
  if (!m.is_vertex()) return std::nullopt;
  return std::pair{m.real_source(), c};
}

}  // namespace

bool verify_certificate(const AlgebraElement& a, const DegreeZeroCertificate& c) {
  if (c.k.is_zero()) return false;
  LeavittPathAlgebra alg(a.graph_ptr(), a.ring());
  AlgebraElement lhs = ghost_path(alg, c.alpha) * a * real_path(alg, c.beta);
  return lhs == c.k * alg.vertex(c.vertex);
}

DegreeZeroCertificate reduce_degree_zero(const AlgebraElement& a, std::size_t slack) {
  if (a.is_zero()) throw PreconditionError("reduce_degree_zero needs a nonzero element");
  if (a.support() != std::set<int>{0})
    throw PreconditionError("reduce_degree_zero needs a homogeneous element of degree 0");
  const Graph& g = a.graph();
  LeavittPathAlgebra alg(a.graph_ptr(), a.ring());
  const std::size_t alpha_max = a.real_degree() + slack;
  const std::size_t beta_max = a.ghost_degree() + slack;

  std::vector<std::vector<Path>> by_length(std::max(alpha_max, beta_max) + 1);
  for (Path& p : enumerate_paths(g, by_length.size() - 1))
    by_length[p.length()].push_back(std::move(p));

  // alpha^* a, cached per alpha
  std::map<Path, AlgebraElement> left;
  auto left_of = [&](const Path& alpha) -> const AlgebraElement& {
    auto it = left.find(alpha);
    if (it == left.end()) it = left.emplace(alpha, ghost_path(alg, alpha) * a).first;
    return it->second;
  };

  for (std::size_t total = 0; total <= alpha_max + beta_max; ++total) {
    for (std::size_t la = 0; la <= std::min(total, alpha_max); ++la) {
      std::size_t lb = total - la;
      if (lb > beta_max) continue;
      for (const Path& alpha : by_length[la]) {
        const AlgebraElement& l = left_of(alpha);
        if (l.is_zero()) continue;
        for (const Path& beta : by_length[lb]) {
          AlgebraElement candidate = l * real_path(alg, beta);
          if (auto kv = as_scaled_vertex(candidate)) {
            DegreeZeroCertificate cert{alpha, beta, kv->first, kv->second};
            if (!verify_certificate(a, cert))
              throw std::logic_error("degree-zero certificate failed re-verification");
            return cert;
          }
        }
      }
    }
  }
  throw BoundExceeded("no (alpha, beta, v, k) found with |alpha| <= " +
                      std::to_string(alpha_max) + " and |beta| <= " +
                      std::to_string(beta_max) + "; inconclusive");
}

// Corner centrality -----------------------------------------------------------

CentralityCheck is_central_in_corner(const AlgebraElement& x, VertexId u,
                                     std::size_t bound, std::uint64_t seed) {
  const Graph& g = x.graph();
  g.check_vertex(u);
  if (!(corner(x, u) == x))
    throw PreconditionError("element is not in the corner at " + g.vertex_name(u));
  LeavittPathAlgebra alg(x.graph_ptr(), x.ring());
  const Ring& r = x.ring();

  std::vector<AlgebraElement> tests;
  AlgebraElement unit = alg.vertex(u);
  std::vector<RingElement> scalars = r.generators();
  for (auto& z : r.center_basis()) scalars.push_back(std::move(z));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 3; ++i) scalars.push_back(r.random_element(rng));
  for (const auto& s : scalars) tests.push_back(s * unit);

  std::vector<Path> from_u;
  for (std::size_t len = 0; len <= bound; ++len)
    for (Path& p : paths_from(g, u, len)) from_u.push_back(std::move(p));
  for (const Path& gamma : from_u)
    for (const Path& delta : from_u) {
      if (gamma.range() != delta.range()) continue;
      Monomial m(gamma, delta);
      if (is_normal(g, m)) tests.push_back(alg.monomial(m));
    }

  CentralityCheck out;
  out.exact = is_acyclic(g) && bound >= longest_path_length(g);
  for (const auto& t : tests) {
    AlgebraElement comm = x * t - t * x;
    if (!comm.is_zero()) {
      out.central = false;
      out.exact = true;
      out.against = t;
      out.commutator = std::move(comm);
      return out;
    }
  }
  return out;
}

// Center ----------------------------------------------------------------------

CenterDescription center(const LeavittPathAlgebra& alg) {
  SimplicityVerdict verdict = is_simple(alg.graph(), alg.ring());
  if (!verdict.simple) {
    std::string why;
    for (const auto& reason : verdict.reasons) {
      if (!why.empty()) why += ", ";
      why += reason.name() + " " + reason.witness(alg.graph(), alg.ring());
    }
    throw PreconditionError(
        "the algebra is not simple (" + why +
        "); the central-scalars description does not apply");
  }
  CenterDescription out;
  out.kind = CenterDescription::Kind::kCentralScalars;
  std::vector<AlgebraElement> checks;
  for (auto gen : alg.generators()) checks.push_back(alg.generator(gen));
  for (const auto& s : alg.ring().generators()) checks.push_back(alg.scalar(s));
  for (const auto& z : alg.ring().center_basis()) {
    AlgebraElement b = alg.scalar(z);
    for (const auto& c : checks)
      if (!(b * c == c * b))
        throw std::logic_error("central candidate " + b.to_string() +
                               " fails to commute with " + c.to_string());
    out.basis.push_back(std::move(b));
  }
  return out;
}

}  // namespace lpa
