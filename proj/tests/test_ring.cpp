#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/ring.hpp"

using namespace lpa;

namespace {

std::vector<Ring> instances() {
  return {Ring::rationals(),
          Ring::prime_field(2),
          Ring::prime_field(7),
          Ring::integers(),
          Ring::integers_mod(6),
          Ring::integers_mod(12),
          Ring::matrices(2, Ring::rationals()),
          Ring::matrices(2, Ring::prime_field(3)),
          Ring::matrices(3, Ring::rationals())};
}

// Direct 2x2 product from the textbook formula.
std::vector<Rational> mul2(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_CASE("ring descriptors") {
  CHECK(Ring::parse("q") == Ring::rationals());
  CHECK(Ring::parse("fp:5") == Ring::prime_field(5));
  CHECK(Ring::parse("z") == Ring::integers());
  CHECK(Ring::parse("zmod:6") == Ring::integers_mod(6));
  CHECK(Ring::parse("mat:2:q") == Ring::matrices(2, Ring::rationals()));
  CHECK(Ring::parse("mat:3:fp:2") == Ring::matrices(3, Ring::prime_field(2)));
  for (const Ring& r : instances()) CHECK(Ring::parse(r.descriptor()) == r);
  CHECK(Ring::parse("mat:2:q").display_name() == "M_2(Q)");
  CHECK(Ring::parse("zmod:6").display_name() == "Z/6");
  CHECK(Ring::parse("fp:5").display_name() == "F_5");
  CHECK_THROWS_AS(Ring::parse("fp:6"), PreconditionError);
  CHECK_THROWS_AS(Ring::parse("zmod:1"), PreconditionError);
  CHECK_THROWS_AS(Ring::parse("mat:0:q"), PreconditionError);
  CHECK_THROWS_AS(Ring::parse("mat:2:z"), PreconditionError);
  CHECK_THROWS_AS(Ring::parse("reals"), ParseError);
}

TEST_CASE("ring arithmetic examples") {
  Ring z6 = Ring::integers_mod(6);
  CHECK(z6.from_integer(4) + z6.from_integer(5) == z6.from_integer(3));
  CHECK(z6.from_integer(-1) == z6.from_integer(5));
  CHECK((z6.from_integer(2) * z6.from_integer(3)).is_zero());

  Ring m2 = Ring::matrices(2, Ring::rationals());
  CHECK(m2.one() == m2.from_entries({1, 0, 0, 1}));
  CHECK(m2.one().is_one());

  Ring q = Ring::rationals();
  CHECK(q.parse_literal("2/3") * q.parse_literal("3/2") == q.one());
  CHECK(q.parse_literal("-2/5").is_negative());
  CHECK(q.parse_literal("-2/5").to_string() == "-2/5");

  Ring f5 = Ring::prime_field(5);
  CHECK(f5.from_integer(3).inverse() == f5.from_integer(2));
  CHECK(f5.from_rational(Rational(1, 2)) == f5.from_integer(3));
  CHECK_THROWS_AS(f5.zero().inverse(), PreconditionError);
  CHECK_THROWS_AS(Ring::integers().from_integer(2).inverse(), PreconditionError);
}

TEST_CASE("ring literals") {
  Ring z6 = Ring::integers_mod(6);
  CHECK(z6.parse_literal("4 mod 6") == z6.from_integer(4));
  CHECK(z6.parse_literal("10") == z6.from_integer(4));
  CHECK_THROWS_AS(z6.parse_literal("4 mod 5"), ParseError);
  CHECK_THROWS_AS(Ring::integers().parse_literal("1/2"), ParseError);

  Ring m2 = Ring::matrices(2, Ring::rationals());
  RingElement d = m2.parse_literal("[[1,0],[0,2]]");
  CHECK(d == m2.from_entries({1, 0, 0, 2}));
  CHECK(m2.parse_literal(d.to_string()) == d);
  CHECK(m2.parse_literal("3") == m2.from_entries({3, 0, 0, 3}));
  CHECK_THROWS_AS(m2.parse_literal("[[1,0]]"), ParseError);
  CHECK_THROWS_AS(m2.parse_literal("[[1,0],[0,x]]"), ParseError);

  std::mt19937_64 rng(2);
  for (const Ring& r : instances())
    for (int i = 0; i < 50; ++i) {
      RingElement x = r.random_element(rng);
      CHECK(r.parse_literal(x.to_string()) == x);
    }
}

TEST_CASE("mixed instances are rejected") {
  Ring q = Ring::rationals(), f2 = Ring::prime_field(2);
  CHECK_THROWS_AS(q.one() + f2.one(), PreconditionError);
  CHECK_THROWS_AS(q.one() * f2.one(), PreconditionError);
  CHECK_THROWS_AS((void)(q.one() == f2.one()), PreconditionError);
}

TEST_CASE("matrix multiplication matches the 2x2 formula") {
  Ring m2 = Ring::matrices(2, Ring::rationals());
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    RingElement a = m2.random_element(rng), b = m2.random_element(rng);
    CHECK((a * b).entries() == mul2(a.entries(), b.entries()));
  }
  // E_12 E_21 = E_11 but E_21 E_12 = E_22
  CHECK(m2.matrix_unit(0, 1) * m2.matrix_unit(1, 0) == m2.matrix_unit(0, 0));
  CHECK(m2.matrix_unit(1, 0) * m2.matrix_unit(0, 1) == m2.matrix_unit(1, 1));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(1);
  for (const Ring& r : instances()) {
    CAPTURE(r.display_name());
    for (int i = 0; i < 1000; ++i) {
      RingElement a = r.random_element(rng), b = r.random_element(rng),
                  c = r.random_element(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * r.one() == a);
      CHECK(r.one() * a == a);
      CHECK(a + r.zero() == a);
      CHECK((a + -a).is_zero());
      CHECK(a - b == a + -b);
    }
  }
}

TEST_CASE("in_center") {
  Ring m2 = Ring::matrices(2, Ring::rationals());
  CHECK(m2.from_entries({3, 0, 0, 3}).in_center());
  RingElement d = m2.from_entries({1, 0, 0, 2});
  CHECK_FALSE(d.in_center());
  CHECK_FALSE(d * m2.matrix_unit(0, 1) == m2.matrix_unit(0, 1) * d);
  Ring z6 = Ring::integers_mod(6);
  for (long long k = 0; k < 6; ++k) CHECK(z6.from_integer(k).in_center());

  // spot check against random elements
  std::mt19937_64 rng(4);
  for (const Ring& r : instances()) {
    for (int i = 0; i < 20; ++i) {
      RingElement x = r.random_element(rng);
      bool commutes = true;
      for (int j = 0; j < 200 && commutes; ++j) {
        RingElement y = r.random_element(rng);
        commutes = x * y == y * x;
      }
      if (x.in_center()) CHECK(commutes);
      bool with_generators = true;
      for (const RingElement& g : r.generators())
        with_generators = with_generators && x * g == g * x;
      CHECK(x.in_center() == with_generators);
    }
  }
}

TEST_CASE("center_basis") {
  CHECK(Ring::rationals().center_basis() ==
        std::vector<RingElement>{Ring::rationals().one()});
  Ring m3 = Ring::matrices(3, Ring::rationals());
  auto basis = m3.center_basis();
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == m3.one());
  CHECK(basis[0].in_center());
  Ring z6 = Ring::integers_mod(6);
  CHECK(z6.center_basis() == std::vector<RingElement>{z6.one()});
}

TEST_CASE("simplicity metadata") {
  CHECK(Ring::rationals().is_simple());
  CHECK(Ring::prime_field(3).is_simple());
  CHECK_FALSE(Ring::integers().is_simple());
  CHECK(Ring::integers_mod(7).is_simple());
  CHECK_FALSE(Ring::integers_mod(6).is_simple());
  CHECK(Ring::matrices(2, Ring::rationals()).is_simple());
  CHECK(Ring::matrices(2, Ring::rationals()).is_field() == false);
  CHECK_FALSE(Ring::matrices(2, Ring::rationals()).is_commutative());
}

TEST_CASE("brute_force_is_simple") {
  CHECK(brute_force_is_simple(Ring::integers_mod(5)));
  CHECK_FALSE(brute_force_is_simple(Ring::integers_mod(6)));
  CHECK(brute_force_is_simple(Ring::matrices(2, Ring::prime_field(2))));
  CHECK_THROWS_AS(brute_force_is_simple(Ring::rationals()), BoundExceeded);
  CHECK_THROWS_AS(brute_force_is_simple(Ring::integers()), BoundExceeded);
  CHECK_THROWS_AS(brute_force_is_simple(Ring::matrices(5, Ring::prime_field(2))),
                  BoundExceeded);

  for (std::uint64_t n = 2; n <= 60; ++n) {
    Ring r = Ring::integers_mod(n);
    CAPTURE(n);
    CHECK(brute_force_is_simple(r) == r.is_simple());
  }
  for (std::uint64_t p : {2, 3, 5}) {
    Ring r = Ring::matrices(2, Ring::prime_field(p));
    CHECK(brute_force_is_simple(r) == r.is_simple());
  }
  Ring m3 = Ring::matrices(3, Ring::prime_field(2));
  CHECK(brute_force_is_simple(m3) == m3.is_simple());
}
