#include "lpa/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'",
                     0, 0);
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

}  // namespace

// Ring ------------------------------------------------------------------------

Ring Ring::rationals() { return Ring(RingKind::kRationals, 0, 1); }

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError("F_p needs a prime p, got " + std::to_string(p));
  return Ring(RingKind::kPrimeField, p, 1);
}

Ring Ring::integers() { return Ring(RingKind::kIntegers, 0, 1); }

Ring Ring::integers_mod(std::uint64_t n) {
  if (n < 2)
    throw PreconditionError("Z/n needs n >= 2, got " + std::to_string(n));
  return Ring(RingKind::kIntegersMod, n, 1);
}

Ring Ring::matrices(std::size_t k, const Ring& base) {
  if (k == 0) throw PreconditionError("matrix size must be positive");
  if (base.kind_ != RingKind::kRationals && base.kind_ != RingKind::kPrimeField)
    throw PreconditionError("matrix rings are supported over Q and F_p only");
  return Ring(RingKind::kMatrices, base.modulus_, k);
}

Ring Ring::parse(std::string_view d) {
  d = trim(d);
  if (d == "q") return rationals();
  if (d == "z") return integers();
  if (d.starts_with("fp:")) return prime_field(parse_u64(d.substr(3), "prime"));
  if (d.starts_with("zmod:"))
    return integers_mod(parse_u64(d.substr(5), "modulus"));
  if (d.starts_with("mat:")) {
    std::string_view rest = d.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected mat:<k>:<q|fp:p>", 0, 0);
    auto k = parse_u64(rest.substr(0, colon), "matrix size");
    Ring base = parse(rest.substr(colon + 1));
    return matrices(static_cast<std::size_t>(k), base);
  }
  throw ParseError("unknown ring '" + std::string(d) +
                       "' (expected q | fp:<p> | z | zmod:<n> | mat:<k>:<q|fp:p>)",
                   0, 0);
}

bool Ring::is_simple() const {
  switch (kind_) {
    case RingKind::kRationals:
    case RingKind::kPrimeField:
    case RingKind::kMatrices:
      return true;
    case RingKind::kIntegers:
      return false;
    case RingKind::kIntegersMod:
      return is_prime(modulus_);
  }
  return false;
}

bool Ring::is_field() const {
  switch (kind_) {
    case RingKind::kRationals:
    case RingKind::kPrimeField:
      return true;
    case RingKind::kIntegersMod:
      return is_prime(modulus_);
    default:
      return false;
  }
}

std::string Ring::descriptor() const {
  switch (kind_) {
    case RingKind::kRationals: return "q";
    case RingKind::kPrimeField: return "fp:" + std::to_string(modulus_);
    case RingKind::kIntegers: return "z";
    case RingKind::kIntegersMod: return "zmod:" + std::to_string(modulus_);
    case RingKind::kMatrices:
      return "mat:" + std::to_string(dim_) + ":" +
             (modulus_ ? "fp:" + std::to_string(modulus_) : std::string("q"));
  }
  return "?";
}

std::string Ring::display_name() const {
  switch (kind_) {
    case RingKind::kRationals: return "Q";
    case RingKind::kPrimeField: return "F_" + std::to_string(modulus_);
    case RingKind::kIntegers: return "Z";
    case RingKind::kIntegersMod: return "Z/" + std::to_string(modulus_);
    case RingKind::kMatrices:
      return "M_" + std::to_string(dim_) + "(" +
             (modulus_ ? "F_" + std::to_string(modulus_) : std::string("Q")) +
             ")";
  }
  return "?";
}

Rational Ring::reduce(const Rational& x) const {
  if (modulus_ == 0) return x;
  mpz_class m(std::to_string(modulus_));
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
      throw PreconditionError("denominator " + den.get_str() +
                              " is not invertible in " + display_name());
    num *= inv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
  return Rational(r);
}

RingElement Ring::zero() const {
  return RingElement(*this, std::vector<Rational>(dim_ * dim_, Rational(0)));
}

RingElement Ring::one() const { return from_integer(1); }

RingElement Ring::from_integer(long long n) const {
  return from_rational(Rational(mpz_class(std::to_string(n))));
}

RingElement Ring::from_rational(const Rational& q) const {
  if (kind_ == RingKind::kIntegers && q.get_den() != 1)
    throw PreconditionError(q.get_str() + " is not an integer");
  Rational v = reduce(q);
  std::vector<Rational> e(dim_ * dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) e[i * dim_ + i] = v;
  return RingElement(*this, std::move(e));
}

RingElement Ring::matrix_unit(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw PreconditionError("matrix unit out of range");
  std::vector<Rational> e(dim_ * dim_, Rational(0));
  e[i * dim_ + j] = 1;
  return RingElement(*this, std::move(e));
}

RingElement Ring::from_entries(std::vector<Rational> entries) const {
  if (entries.size() != dim_ * dim_)
    throw PreconditionError("expected " + std::to_string(dim_ * dim_) +
                            " entries for " + display_name());
  for (auto& x : entries) {
    if (kind_ == RingKind::kIntegers && x.get_den() != 1)
      throw PreconditionError(x.get_str() + " is not an integer");
    x = reduce(x);
  }
  return RingElement(*this, std::move(entries));
}

Rational Ring::parse_scalar(std::string_view text) const {
  std::string_view s = trim(text);
  std::optional<std::uint64_t> mod;
  if (auto pos = s.find("mod"); pos != std::string_view::npos) {
    mod = parse_u64(trim(s.substr(pos + 3)), "modulus");
    s = trim(s.substr(0, pos));
  }
  if (mod && (modulus_ == 0 || *mod != modulus_))
    throw ParseError("literal '" + std::string(text) + "' does not belong to " +
                         display_name(),
                     0, 0);
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!is_integer_text(num) || !is_integer_text(den))
    throw ParseError("invalid ring literal '" + std::string(text) + "'", 0, 0);
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  std::string den_str(den.front() == '+' ? den.substr(1) : den);
  mpz_class n(num_str), d(den_str);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
  Rational q(n, d);
  q.canonicalize();
  if (kind_ == RingKind::kIntegers && q.get_den() != 1)
    throw ParseError("'" + std::string(text) + "' is not an integer", 0, 0);
  try {
    return reduce(q);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

RingElement Ring::parse_literal(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty ring literal", 0, 0);
  if (s.front() != '[') {
    Rational v = parse_scalar(s);
    std::vector<Rational> e(dim_ * dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) e[i * dim_ + i] = v;
    return RingElement(*this, std::move(e));
  }
  if (!is_matrix())
    throw ParseError("matrix literal given for " + display_name(), 0, 0);
  // [[a,b],[c,d]]
  if (s.size() < 4 || s.substr(0, 1) != "[" || s.back() != ']')
    throw ParseError("malformed matrix literal '" + std::string(s) + "'", 0, 0);
  std::string_view body = trim(s.substr(1, s.size() - 2));
  std::vector<Rational> entries;
  std::size_t rows = 0;
  while (!body.empty()) {
    if (body.front() != '[')
      throw ParseError("malformed matrix literal '" + std::string(s) + "'", 0, 0);
    auto close = body.find(']');
    if (close == std::string_view::npos)
      throw ParseError("unterminated matrix row in '" + std::string(s) + "'", 0, 0);
    std::string_view row = body.substr(1, close - 1);
    std::size_t cols = 0;
    while (true) {
      auto comma = row.find(',');
      entries.push_back(parse_scalar(row.substr(0, comma)));
      ++cols;
      if (comma == std::string_view::npos) break;
      row.remove_prefix(comma + 1);
    }
    if (cols != dim_)
      throw ParseError("matrix row has " + std::to_string(cols) +
                           " entries, expected " + std::to_string(dim_),
                       0, 0);
    ++rows;
    body = trim(body.substr(close + 1));
    if (!body.empty()) {
      if (body.front() != ',')
        throw ParseError("expected ',' between matrix rows", 0, 0);
      body = trim(body.substr(1));
    }
  }
  if (rows != dim_)
    throw ParseError("matrix has " + std::to_string(rows) + " rows, expected " +
                         std::to_string(dim_),
                     0, 0);
  return RingElement(*this, std::move(entries));
}

std::vector<RingElement> Ring::generators() const {
  if (!is_matrix()) return {one()};
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.push_back(matrix_unit(i, j));
  return out;
}

std::vector<RingElement> Ring::center_basis() const { return {one()}; }

RingElement Ring::random_element(std::mt19937_64& rng) const {
  std::vector<Rational> e(dim_ * dim_);
  for (auto& x : e) {
    if (modulus_ != 0) {
      std::uniform_int_distribution<std::uint64_t> d(0, modulus_ - 1);
      x = Rational(mpz_class(std::to_string(d(rng))));
    } else if (kind_ == RingKind::kIntegers) {
      std::uniform_int_distribution<int> d(-3, 3);
      x = d(rng);
    } else {
      std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  }
  return RingElement(*this, std::move(e));
}

// RingElement -----------------------------------------------------------------

namespace {

void require_same(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring()))
    throw PreconditionError("mixed ring instances: " + a.ring().display_name() +
                            " and " + b.ring().display_name());
}

}  // namespace

const Rational& RingElement::scalar() const {
  if (ring_.dim() != 1)
    throw PreconditionError("matrix element has no single scalar entry");
  return entries_.front();
}

bool RingElement::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x == 0; });
}

bool RingElement::is_one() const { return *this == ring_.one(); }

bool RingElement::is_negative() const {
  return ring_.modulus() == 0 && ring_.dim() == 1 && entries_.front() < 0;
}

RingElement RingElement::operator-() const {
  std::vector<Rational> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = ring_.reduce(-entries_[i]);
  return RingElement(ring_, std::move(e));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  std::vector<Rational> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a.ring_.reduce(a.entries_[i] + b.entries_[i]);
  return RingElement(a.ring_, std::move(e));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return a + (-b);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const std::size_t k = a.ring_.dim();
  std::vector<Rational> e(k * k, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const Rational& x = a.entries_[i * k + l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < k; ++j) e[i * k + j] += x * b.entries_[l * k + j];
    }
  for (auto& x : e) x = a.ring_.reduce(x);
  return RingElement(a.ring_, std::move(e));
}

RingElement RingElement::inverse() const {
  if (!ring_.is_field())
    throw PreconditionError("inverse needs a field, got " + ring_.display_name());
  if (is_zero()) throw PreconditionError("zero has no inverse");
  Rational inv = 1 / entries_.front();
  return ring_.from_rational(inv);
}

bool RingElement::in_center() const {
  if (ring_.is_commutative()) return true;
  for (const auto& g : ring_.generators())
    if (!(*this * g == g * *this)) return false;
  return true;
}

std::string RingElement::to_string() const {
  if (ring_.dim() == 1) return entries_.front().get_str();
  const std::size_t k = ring_.dim();
  std::string s = "[";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < k; ++j) {
      if (j) s += ',';
      s += entries_[i * k + j].get_str();
    }
    s += ']';
  }
  return s + "]";
}

bool operator==(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return a.entries_ == b.entries_;
}

// Brute-force simplicity -------------------------------------------------------

namespace {

constexpr std::uint64_t kMaxScalarModulus = 4096;
constexpr std::uint64_t kMaxMatrixRingSize = std::uint64_t{1} << 20;

// Ideal generated by x in Z/n is the set of multiples r*x.
bool residue_ring_is_simple(std::uint64_t n) {
  std::vector<char> seen(n);
  for (std::uint64_t x = 1; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t count = 0;
    for (std::uint64_t r = 0; r < n; ++r) {
      std::uint64_t y = r * x % n;
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
      }
    }
    if (count < n) return false;
  }
  return true;
}

using Vec = std::vector<std::uint64_t>;

// F_p-span of vectors, kept in echelon form keyed by pivot.
class ModSpan {
 public:
  ModSpan(std::size_t dim, std::uint64_t p) : p_(p), rows_(dim) {}

  // Returns true if v enlarged the span.
  bool add(Vec v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (rows_[i].empty()) {
        std::uint64_t inv = inverse(v[i]);
        for (auto& x : v) x = x * inv % p_;
        rows_[i] = std::move(v);
        ++rank_;
        return true;
      }
      std::uint64_t c = v[i];
      for (std::size_t j = i; j < v.size(); ++j)
        v[j] = (v[j] + (p_ - c) * rows_[i][j]) % p_;
    }
    return false;
  }

  std::size_t rank() const { return rank_; }

 private:
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, e = p_ - 2, b = a % p_;
    while (e) {
      if (e & 1) result = result * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return result;
  }

  std::uint64_t p_;
  std::vector<Vec> rows_;
  std::size_t rank_ = 0;
};

bool matrix_ring_is_simple(std::size_t k, std::uint64_t p) {
  const std::size_t n = k * k;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= p;
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec c(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (a[i * k + l])
          for (std::size_t j = 0; j < k; ++j)
            c[i * k + j] = (c[i * k + j] + a[i * k + l] * b[l * k + j]) % p;
    return c;
  };
  std::vector<Vec> units;
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(n, 0);
    u[i] = 1;
    units.push_back(std::move(u));
  }
  for (std::uint64_t code = 1; code < size; ++code) {
    Vec x(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = c % p;
      c /= p;
    }
    // Additive subgroups of M_k(F_p) are F_p-subspaces, and the matrix units
    // generate the ring, so closing the span under left and right
    // multiplication by them yields the ideal RxR.
    ModSpan span(n, p);
    std::vector<Vec> queue{x};
    span.add(x);
    while (!queue.empty() && span.rank() < n) {
      Vec y = std::move(queue.back());
      queue.pop_back();
      for (const Vec& u : units) {
        for (Vec z : {mul(u, y), mul(y, u)})
          if (span.add(z)) queue.push_back(std::move(z));
      }
    }
    if (span.rank() < n) return false;
  }
  return true;
}

}  // namespace

bool brute_force_is_simple(const Ring& r) {
  if (!r.is_finite())
    throw BoundExceeded(r.display_name() +
                        " is infinite; brute-force ideal enumeration needs a "
                        "finite ring");
  if (!r.is_matrix()) {
    if (r.modulus() > kMaxScalarModulus)
      throw BoundExceeded(r.display_name() + " exceeds the brute-force bound of " +
                          std::to_string(kMaxScalarModulus) + " elements");
    return residue_ring_is_simple(r.modulus());
  }
  const std::size_t n = r.dim() * r.dim();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= r.modulus();
    if (size > kMaxMatrixRingSize)
      throw BoundExceeded(r.display_name() +
                          " has more than 2^20 elements; brute force refused");
  }
  return matrix_ring_is_simple(r.dim(), r.modulus());
}

}  // namespace lpa
