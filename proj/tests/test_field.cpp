#include <gtest/gtest.h>

#include "gradix/field.hpp"

using namespace gradix;

TEST(PrimeField, ArithmeticAgreesWithIntegerModulo) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    PrimeField f(p);
    for (long long a = -20; a <= 20; ++a)
      for (long long b = -20; b <= 20; ++b) {
        auto x = f.from_int(a), y = f.from_int(b);
        auto mod = [&](long long v) { return static_cast<std::uint32_t>(((v % p) + p) % p); };
        EXPECT_EQ(f.add(x, y), mod(a + b));
        EXPECT_EQ(f.sub(x, y), mod(a - b));
        EXPECT_EQ(f.mul(x, y), mod(a * b));
        if (mod(b) != 0) { EXPECT_EQ(f.mul(f.div(x, y), y), x); }
      }
  }
}

TEST(PrimeField, InverseOfZeroThrows) {
  PrimeField f(7);
  EXPECT_THROW(f.inv(0), Error);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(PrimeField, ParsesIntegersAndFractions) {
  PrimeField f(3);
  EXPECT_EQ(f.parse("2"), 2u);
  EXPECT_EQ(f.parse("-1"), 2u);
  EXPECT_EQ(f.parse("1/2"), 2u);
  EXPECT_EQ(f.parse("7"), 1u);
  EXPECT_THROW(f.parse("1/3"), Error);
  EXPECT_THROW(f.parse("abc"), Error);
}

TEST(PrimeField, RejectsNonPrimeModulus) {
  try {
    PrimeField f(4);
    FAIL() << "accepted 4";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
    EXPECT_NE(std::string(e.what()).find("p not prime"), std::string::npos);
  }
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(91), Error);
}

TEST(RationalField, KeepsLowestTerms) {
  RationalField q;
  EXPECT_EQ(q.format(q.parse("-2/6")), "-1/3");
  EXPECT_EQ(q.format(q.parse("4/2")), "2");
  EXPECT_EQ(q.format(q.add(q.parse("1/2"), q.parse("1/3"))), "5/6");
  EXPECT_EQ(q.format(q.inv(q.parse("-3/4"))), "-4/3");
  EXPECT_THROW(q.parse("1/0"), Error);
  EXPECT_THROW(q.inv(q.zero()), Error);
}

TEST(FieldSpec, VisitDispatchesOnKind) {
  EXPECT_EQ(visit_field(FieldSpec::prime(5), [](const auto& f) { return f.name(); }), "F5");
  EXPECT_EQ(visit_field(FieldSpec::rationals(), [](const auto& f) { return f.name(); }), "Q");
  EXPECT_THROW(FieldSpec::prime(9), Error);
}
