#include <doctest.h>

#include "fastph/field.hpp"
#include "oracles.hpp"

using namespace fastph;

namespace {
FieldElement e(std::uint16_t v) { return FieldElement{v}; }
}  // namespace

TEST_CASE("field: small examples") {
  const FieldContext f2(2), f5(5), f7(7), f13(13);
  CHECK(ff_add(e(3), e(4), f5) == e(2));
  CHECK(ff_add(e(1), e(1), f2) == e(0));
  CHECK(ff_add(e(0), e(6), f7) == e(6));
  CHECK(ff_mul(e(3), e(4), f5) == e(2));
  CHECK(ff_mul(e(1), e(6), f7) == e(6));
  CHECK(ff_mul(e(1), e(1), f2) == e(1));
  CHECK(ff_inv(e(3), f5) == e(2));
  CHECK(ff_inv(e(1), f2) == e(1));
  for (std::uint16_t a = 1; a < 13; ++a) {
    CHECK(ff_mul(e(a), ff_inv(e(a), f13), f13) == e(1));
  }
}

TEST_CASE("field: inverse of zero throws") {
  const FieldContext f(5);
  CHECK_THROWS_AS(f.inv(e(0)), ZeroInverse);
  CHECK_THROWS_AS(ff_inv(e(0), FieldContext(65521)), ZeroInverse);
}

TEST_CASE("field: modulus validation") {
  CHECK_THROWS_AS(FieldContext(0), InvalidField);
  CHECK_THROWS_AS(FieldContext(1), InvalidField);
  CHECK_THROWS_AS(FieldContext(4), InvalidField);
  CHECK_THROWS_AS(FieldContext(65537), InvalidField);  // prime, but too large
  CHECK_THROWS_AS(FieldContext(65535), InvalidField);
  CHECK_NOTHROW(FieldContext(65521));
  CHECK(is_prime(2));
  CHECK(is_prime(257));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("field: axioms hold exhaustively for small primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const FieldContext f(p);
    for (std::uint16_t a = 0; a < p; ++a) {
      for (std::uint16_t b = 0; b < p; ++b) {
        CHECK(f.add(e(a), e(b)) == f.add(e(b), e(a)));
        CHECK(f.mul(e(a), e(b)) == f.mul(e(b), e(a)));
        CHECK(f.sub(f.add(e(a), e(b)), e(b)) == e(a));
        for (std::uint16_t c = 0; c < p; ++c) {
          CHECK(f.add(f.add(e(a), e(b)), e(c)) == f.add(e(a), f.add(e(b), e(c))));
          CHECK(f.mul(f.mul(e(a), e(b)), e(c)) == f.mul(e(a), f.mul(e(b), e(c))));
          CHECK(f.mul(e(a), f.add(e(b), e(c))) == f.add(f.mul(e(a), e(b)), f.mul(e(a), e(c))));
        }
      }
      if (a != 0) CHECK(f.inv(f.inv(e(a))) == e(a));
    }
  }
}

TEST_CASE("field: inverses agree with Fermat for a large prime") {
  const std::uint32_t p = 65521;
  const FieldContext f(p);
  for (std::uint32_t a = 1; a < p; a += 97) {
    const auto x = f.inv(e(static_cast<std::uint16_t>(a)));
    CHECK(x.value == oracle::inv(a, p));
  }
  CHECK(f.neg(e(1)).value == p - 1);
  CHECK(f.element(-1).value == p - 1);
}
