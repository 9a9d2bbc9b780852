#include <algorithm>
#include <deque>
#include <optional>

#include "lpa/errors.hpp"
#include "lpa/structure.hpp"

namespace lpa {

namespace {

// Arithmetic in Q (p = 0) or F_p on canonical representatives.
struct Field {
  explicit Field(std::uint64_t p) : p(p), m(static_cast<unsigned long>(p)) {}

  std::uint64_t p;
  mpz_class m;

  Rational reduce(Rational x) const {
    if (p == 0) return x;
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_num_mpz_t(), m.get_mpz_t());
    return Rational(r);
  }
  Rational inverse(const Rational& x) const {
    if (p == 0) return 1 / x;
    mpz_class inv;
    mpz_class num = x.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    return Rational(inv);
  }
  // v += c * w
  void axpy(std::vector<Rational>& v, const Rational& c,
            const std::vector<Rational>& w) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (w[i] != 0) v[i] = reduce(v[i] + c * w[i]);
  }
};

// Row-echelon span; rows normalized to a leading 1.
class Span {
 public:
  Span(std::size_t dim, Field k) : dim_(dim), k_(k) {}

  bool add(std::vector<Rational> v) {
    for (auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      Rational c = k_.reduce(-v[pivot]);
      k_.axpy(v, c, row);
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (lead == v.end()) return false;
    std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
    Rational inv = k_.inverse(v[pivot]);
    for (auto& x : v)
      if (x != 0) x = k_.reduce(x * inv);
    // keep existing rows reduced at the new pivot so later reductions stay
    // a single pass
    for (auto& [p, row] : rows_)
      if (row[pivot] != 0) k_.axpy(row, k_.reduce(-row[pivot]), v);
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  // Basis of { x : row . x = 0 for every row }.
  std::vector<std::vector<Rational>> null_space() const {
    std::vector<std::vector<Rational>> out;
    for (std::size_t free = 0; free < dim_; ++free) {
      if (rows_.count(free)) continue;
      std::vector<Rational> x(dim_, Rational(0));
      x[free] = 1;
      for (const auto& [pivot, row] : rows_)
        if (row[free] != 0) x[pivot] = k_.reduce(-row[free]);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::size_t dim_;
  Field k_;
  std::map<std::size_t, std::vector<Rational>> rows_;
};

// The same row-echelon span over F_p with word-size residues.
class ModSpan {
 public:
  ModSpan(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  bool add(std::vector<std::uint64_t> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      axpy(v, p_ - v[pivot], row);
    }
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (lead == v.end()) return false;
    std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
    std::uint64_t inv = inverse(v[pivot]);
    for (auto& x : v) x = x * inv % p_;
    for (auto& [q, row] : rows_)
      if (row[pivot] != 0) axpy(row, p_ - row[pivot], v);
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void axpy(std::vector<std::uint64_t>& v, std::uint64_t c,
            const std::vector<std::uint64_t>& w) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (w[i] != 0) v[i] = (v[i] + c * w[i]) % p_;
  }
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return result;
  }

  std::size_t dim_;
  std::uint64_t p_;
  std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

// Residues stay below 2^31 so products fit in 64 bits.
constexpr std::uint64_t kCheckPrime = 2147483647;

// x mod p, or nullopt when p divides the denominator.
std::optional<std::uint64_t> residue(const Rational& x, std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p)), num, den, inv;
  mpz_mod(num.get_mpz_t(), x.get_num_mpz_t(), m.get_mpz_t());
  mpz_mod(den.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t());
  if (den == 0) return std::nullopt;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = num * inv % m;
  return r.get_ui();
}

}  // namespace

FiniteModel::FiniteModel(const LeavittPathAlgebra& alg, std::size_t max_dim)
    : alg_(alg), p_(alg.ring().modulus()) {
  const Ring& r = alg.ring();
  if (!r.is_field() || r.dim() != 1)
    throw PreconditionError("the brute-force oracles need a field, got " +
                            r.display_name());
  if (!is_acyclic(alg.graph()))
    throw PreconditionError("the brute-force oracles need an acyclic graph");
  basis_ = normal_basis(alg.graph());
  if (basis_.size() > max_dim)
    throw BoundExceeded("normal-form basis has " + std::to_string(basis_.size()) +
                        " elements, above the oracle bound " + std::to_string(max_dim));
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  auto sparse = [&](const AlgebraElement& x) {
    Sparse s;
    for (const auto& [m, c] : x.terms()) s.emplace_back(index_.at(m), c.scalar());
    return s;
  };
  for (auto gen : alg.generators()) {
    AlgebraElement ge = alg.generator(gen);
    std::vector<Sparse> l, rr;
    for (const auto& b : basis_) {
      AlgebraElement be = alg.monomial(b);
      l.push_back(sparse(ge * be));
      rr.push_back(sparse(be * ge));
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(rr));
  }
  table_.resize(basis_.size());
}

FiniteModel::Vector FiniteModel::coordinates(const AlgebraElement& x) const {
  if (!(x.ring() == alg_.ring()) || !(x.graph() == alg_.graph()))
    throw PreconditionError("element does not belong to the modelled algebra");
  Vector v(dim(), Rational(0));
  for (const auto& [m, c] : x.terms()) v[index_.at(m)] = c.scalar();
  return v;
}

AlgebraElement FiniteModel::element(const Vector& v) const {
  RawSum raw;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) raw.emplace_back(basis_[i], alg_.ring().from_rational(v[i]));
  return alg_.from_raw(std::move(raw));
}

FiniteModel::Vector FiniteModel::apply(const std::vector<Sparse>& action,
                                       const Vector& v) const {
  Field k{p_};
  Vector out(dim(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (const auto& [j, c] : action[i]) out[j] = k.reduce(out[j] + v[i] * c);
  }
  return out;
}

std::optional<std::size_t> FiniteModel::modular_ideal_dim(const Vector& v,
                                                          std::uint64_t p) const {
  using ModVector = std::vector<std::uint64_t>;
  using ModSparse = std::vector<std::pair<std::size_t, std::uint64_t>>;
  auto to_mod = [&](const std::vector<std::vector<Sparse>>& actions) {
    std::vector<std::vector<ModSparse>> out;
    for (const auto& action : actions) {
      std::vector<ModSparse> rows;
      for (const auto& row : action) {
        ModSparse r;
        for (const auto& [j, c] : row) r.emplace_back(j, *residue(c, p));
        rows.push_back(std::move(r));
      }
      out.push_back(std::move(rows));
    }
    return out;
  };
  ModVector start(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    auto r = residue(v[i], p);
    if (!r) return std::nullopt;
    start[i] = *r;
  }
  auto left = to_mod(left_), right = to_mod(right_);
  ModSpan span(dim(), p);
  if (!span.add(start)) return 0;
  std::deque<ModVector> queue{start};
  while (!queue.empty() && span.rank() < dim()) {
    ModVector y = std::move(queue.front());
    queue.pop_front();
    for (const auto* actions : {&left, &right}) {
      for (const auto& action : *actions) {
        ModVector z(dim(), 0);
        for (std::size_t i = 0; i < dim(); ++i) {
          if (y[i] == 0) continue;
          for (const auto& [j, c] : action[i]) z[j] = (z[j] + y[i] * c) % p;
        }
        if (span.add(z)) queue.push_back(std::move(z));
      }
    }
  }
  return span.rank();
}

std::size_t FiniteModel::ideal_dim(const Vector& v) const {
  if (p_ != 0 && p_ <= kCheckPrime) return *modular_ideal_dim(v, p_);
  // Every vector met mod P reduces an integral element of the ideal over Q,
  // so full rank mod P certifies full rank over Q. Anything less is
  // recomputed exactly.
  if (p_ == 0)
    if (auto r = modular_ideal_dim(v, kCheckPrime); r && *r == dim()) return *r;
  Span span(dim(), Field{p_});
  if (!span.add(v)) return 0;
  std::deque<Vector> queue{v};
  while (!queue.empty() && span.rank() < dim()) {
    Vector y = std::move(queue.front());
    queue.pop_front();
    for (std::size_t g = 0; g < left_.size(); ++g) {
      for (const auto* action : {&left_[g], &right_[g]}) {
        Vector z = apply(*action, y);
        if (span.add(z)) queue.push_back(std::move(z));
      }
    }
  }
  return span.rank();
}

const std::vector<FiniteModel::Sparse>& FiniteModel::product_row(std::size_t i) const {
  if (!table_[i]) {
    std::vector<Sparse> row;
    AlgebraElement bi = alg_.monomial(basis_[i]);
    for (const auto& b : basis_) {
      Sparse s;
      AlgebraElement prod = bi * alg_.monomial(b);
      for (const auto& [m, c] : prod.terms()) s.emplace_back(index_.at(m), c.scalar());
      row.push_back(std::move(s));
    }
    table_[i] = std::move(row);
  }
  return *table_[i];
}

std::size_t FiniteModel::corner_ideal_dim(std::size_t i,
                                          const VertexSet& corner_vertices) const {
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j < dim(); ++j)
    if (corner_vertices.contains(basis_[j].real_source()) &&
        corner_vertices.contains(basis_[j].ghost_source()))
      members.push_back(j);
  if (std::find(members.begin(), members.end(), i) == members.end())
    throw PreconditionError("basis element is not in the corner");
  Field k{p_};
  Span span(dim(), k);
  Vector start(dim(), Rational(0));
  start[i] = 1;
  span.add(start);
  std::deque<Vector> queue{start};
  while (!queue.empty() && span.rank() < members.size()) {
    Vector y = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j : members) {
      // b_j * y and y * b_j
      Vector left(dim(), Rational(0)), right(dim(), Rational(0));
      const auto& row_j = product_row(j);
      for (std::size_t t = 0; t < dim(); ++t) {
        if (y[t] == 0) continue;
        for (const auto& [s, c] : row_j[t]) left[s] = k.reduce(left[s] + y[t] * c);
        for (const auto& [s, c] : product_row(t)[j]) right[s] = k.reduce(right[s] + y[t] * c);
      }
      for (Vector* z : {&left, &right})
        if (span.add(*z)) queue.push_back(std::move(*z));
    }
  }
  return span.rank();
}

std::vector<FiniteModel::Vector> FiniteModel::commutant() const {
  // Row (g, j) of the system: sum_i x_i [(b_i g - g b_i)]_j = 0.
  Field k{p_};
  Span rows(dim(), k);
  for (std::size_t g = 0; g < left_.size(); ++g) {
    std::vector<Vector> system(dim(), Vector(dim(), Rational(0)));
    for (std::size_t i = 0; i < dim(); ++i) {
      for (const auto& [j, c] : right_[g][i]) system[j][i] = k.reduce(system[j][i] + c);
      for (const auto& [j, c] : left_[g][i]) system[j][i] = k.reduce(system[j][i] - c);
    }
    for (auto& row : system) rows.add(std::move(row));
  }
  return rows.null_space();
}

std::size_t FiniteModel::rank(const std::vector<Vector>& vs) const {
  Span span(dim(), Field{p_});
  for (const auto& v : vs) span.add(v);
  return span.rank();
}

bool bruteforce_simplicity_oracle(const LeavittPathAlgebra& alg, std::size_t max_dim) {
  FiniteModel model(alg, max_dim);
  for (std::size_t i = 0; i < model.dim(); ++i) {
    FiniteModel::Vector e(model.dim(), Rational(0));
    e[i] = 1;
    if (model.ideal_dim(e) < model.dim()) return false;
  }
  return true;
}

std::vector<AlgebraElement> bruteforce_center_oracle(const LeavittPathAlgebra& alg,
                                                     std::size_t max_dim) {
  FiniteModel model(alg, max_dim);
  std::vector<AlgebraElement> out;
  for (const auto& v : model.commutant()) out.push_back(model.element(v));
  return out;
}

CornerTransfer corner_simplicity_transfer_check(const LeavittPathAlgebra& alg,
                                                std::size_t max_dim) {
  const std::size_t n = alg.graph().num_vertices();
  if (n > kMaxCornerVertices)
    throw BoundExceeded("corner sweep over " + std::to_string(n) +
                        " vertices exceeds the bound " +
                        std::to_string(kMaxCornerVertices));
  FiniteModel model(alg, max_dim);
  CornerTransfer out;
  out.algebra_simple = bruteforce_simplicity_oracle(alg, max_dim);
  out.all_corners_simple = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet f(n);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) f.insert(v);
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < model.dim(); ++j)
      if (f.contains(model.basis()[j].real_source()) &&
          f.contains(model.basis()[j].ghost_source()))
        members.push_back(j);
    bool simple = std::all_of(members.begin(), members.end(), [&](std::size_t j) {
      return model.corner_ideal_dim(j, f) == members.size();
    });
    if (!simple) {
      out.all_corners_simple = false;
      out.non_simple_corners.push_back(std::move(f));
    }
  }
  out.equivalence_holds = out.algebra_simple == out.all_corners_simple;
  return out;
}

}  // namespace lpa
