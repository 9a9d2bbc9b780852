#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lpa {

using Rational = mpq_class;

class RingElement;

enum class RingKind {
  kRationals,    // Q
  kPrimeField,   // F_p
  kIntegers,     // Z
  kIntegersMod,  // Z/n
  kMatrices,     // M_k(Q) or M_k(F_p)
};

/// Descriptor of a unital coefficient ring R. Cheap to copy; two descriptors
/// compare equal iff they denote the same instance.
///
/// Simplicity is metadata here, not something decided for arbitrary rings:
/// Q, F_p, Z/p and matrix rings over a field are simple; Z and Z/n with n
/// composite are not. brute_force_is_simple() double-checks the finite ones.
class Ring {
 public:
  static Ring rationals();
  static Ring prime_field(std::uint64_t p);
  static Ring integers();
  static Ring integers_mod(std::uint64_t n);
  /// M_k over `base`, which must be rationals() or prime_field(p).
  static Ring matrices(std::size_t k, const Ring& base);
  /// `q | fp:<p> | z | zmod:<n> | mat:<k>:<q|fp:p>`
  static Ring parse(std::string_view descriptor);

  RingKind kind() const noexcept { return kind_; }
  /// Characteristic modulus; 0 for Q, Z and M_k(Q).
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// Matrix size; 1 for scalar rings.
  std::size_t dim() const noexcept { return dim_; }
  bool is_matrix() const noexcept { return kind_ == RingKind::kMatrices; }

  bool is_simple() const;
  bool is_commutative() const { return dim_ == 1; }
  /// Q, F_p and Z/p.
  bool is_field() const;
  bool is_finite() const { return modulus_ != 0; }

  /// Round-trippable descriptor, e.g. "mat:2:fp:3".
  std::string descriptor() const;
  /// Human-readable name, e.g. "M_2(F_3)".
  std::string display_name() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(long long n) const;
  /// Only for rings containing the value (Q, or fields/rings with an inverse
  /// of the denominator).
  RingElement from_rational(const Rational& q) const;
  /// E_{ij}; matrix rings only.
  RingElement matrix_unit(std::size_t i, std::size_t j) const;
  RingElement from_entries(std::vector<Rational> entries) const;

  /// Parses `3`, `-2/5`, `4 mod 6`, `[[1,0],[0,2]]`. A scalar literal in a
  /// matrix ring denotes the scalar matrix.
  RingElement parse_literal(std::string_view text) const;

  /// A generating set of R as a ring: {1} for commutative instances, the
  /// matrix units otherwise. x is central iff it commutes with all of them.
  std::vector<RingElement> generators() const;

  /// Additive generating description of Z(R).
  std::vector<RingElement> center_basis() const;

  /// Small random element; entries drawn from a narrow range so products
  /// stay readable.
  RingElement random_element(std::mt19937_64& rng) const;

  /// Canonical representative of a base-ring scalar: residues in [0, n).
  Rational reduce(const Rational& x) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint64_t modulus, std::size_t dim)
      : kind_(kind), modulus_(modulus), dim_(dim) {}

  Rational parse_scalar(std::string_view text) const;

  friend class RingElement;

  RingKind kind_ = RingKind::kRationals;
  std::uint64_t modulus_ = 0;
  std::size_t dim_ = 1;
};

/// Exact element of a Ring. Scalars are stored as a single entry; matrices
/// row-major with dim*dim entries. Residues are kept in [0, n).
class RingElement {
 public:
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  /// The single entry of a scalar ring element.
  const Rational& scalar() const;

  bool is_zero() const;
  bool is_one() const;
  /// True for negative scalars of Q and Z; used to print "a - b".
  bool is_negative() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& b) { return *this = *this + b; }

  /// Multiplicative inverse in a field instance.
  RingElement inverse() const;

  /// x commutes with every ring element.
  bool in_center() const;

  /// Literal syntax accepted by Ring::parse_literal.
  std::string to_string() const;

  /// Throws PreconditionError on mixed instances.
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingElement(Ring ring, std::vector<Rational> entries)
      : ring_(ring), entries_(std::move(entries)) {}

  friend class Ring;

  Ring ring_;
  std::vector<Rational> entries_;
};

/// Oracle for the is_simple metadata of finite instances: for every nonzero x
/// the two-sided ideal generated by x is enumerated and compared with R.
/// Supports Z/n (n <= 4096), F_p (p <= 4096) and M_k(F_p) with p^(k*k) <= 2^20.
/// Throws BoundExceeded for infinite or larger instances.
bool brute_force_is_simple(const Ring& r);

}  // namespace lpa
