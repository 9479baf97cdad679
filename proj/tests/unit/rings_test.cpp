#include <gtest/gtest.h>

#include "brauer/error.hpp"
#include "brauer/rings.hpp"

using namespace brauer;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), mpq_class(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), mpq_class(-7));
  EXPECT_EQ(parse_rational("+2/-4"), mpq_class(-1, 2));
  EXPECT_EQ(format_rational(mpq_class(-3, 9) * 3), "-1");
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("0.5"), ValidationError);
  EXPECT_THROW(parse_rational(""), ValidationError);
}

TEST(Rational, FieldOps) {
  const RationalField qq;
  EXPECT_EQ(qq.inv(mpq_class(-2, 3)), mpq_class(-3, 2));
  EXPECT_THROW(qq.inv(0), RangeError);
  EXPECT_EQ(qq.format(qq.add(qq.parse("1/3"), qq.parse("1/6"))), "1/2");
  EXPECT_EQ(qq.name(), "QQ");
}

TEST(Integer, RejectsFractions) {
  const IntegerRing zz;
  EXPECT_EQ(zz.from_rational(mpq_class(8, 4)), 2);
  EXPECT_THROW(zz.from_rational(mpq_class(1, 2)), ValidationError);
  EXPECT_EQ(zz.parse("-12"), -12);
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f5(5);
  EXPECT_EQ(f5.from_int(-1), 4u);
  EXPECT_EQ(f5.from_rational(mpq_class(1, 2)), 3u);
  EXPECT_EQ(f5.mul(f5.inv(3), 3), 1u);
  for (std::uint64_t a = 1; a < 5; ++a) EXPECT_EQ(f5.mul(a, f5.inv(a)), 1u);
  EXPECT_THROW(f5.inv(0), RangeError);
  EXPECT_THROW(f5.from_rational(mpq_class(1, 5)), ValidationError);
  EXPECT_THROW(PrimeField(6), RangeError);
  EXPECT_THROW(PrimeField(1), RangeError);
  EXPECT_THROW(PrimeField(4294967311ULL), RangeError);
  EXPECT_EQ(f5.name(), "GF(5)");
  EXPECT_EQ(f5.parse("-2"), 3u);
  EXPECT_EQ(PrimeField(2147483647).mul(2147483646, 2147483646), 1u);
}

TEST(Poly, Arithmetic) {
  const DeltaPolyRing r;
  const Poly d = r.indeterminate();
  const Poly p = (d + Poly(2)) * (d - Poly(3));
  EXPECT_EQ(r.format(p), "d^2-d-6");
  EXPECT_EQ(p.evaluate(3), 0);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(r.format(r.zero()), "0");
  EXPECT_EQ(r.to_rational(Poly(mpq_class(5, 2))), mpq_class(5, 2));
  EXPECT_FALSE(r.to_rational(d).has_value());
}

TEST(Poly, ParseRoundTrip) {
  const DeltaPolyRing r;
  for (const char* text : {"8*d+48", "-d+5", "d^3-1/2*d", "7", "-3/4*d^2+d-1", "0"}) {
    EXPECT_EQ(r.format(r.parse(text)), text);
  }
  EXPECT_EQ(r.parse("d + d"), r.parse("2*d"));
  EXPECT_THROW(r.parse("2d"), ValidationError);
  EXPECT_THROW(r.parse("d^"), ValidationError);
  EXPECT_THROW(r.parse(""), ValidationError);
}

TEST(Combinatorics, Counts) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(ring_pow(RationalField{}, mpq_class(-2), 3), -8);
  EXPECT_EQ(ring_pow(PrimeField(7), 3u, 6), 1u);
}

// sum_k (-1)^k C(n,k) C(2n-2k, n-1) vanishes; it is the trace that forces
// the kernel of F on B_{n+1}(-2n) to be nonzero.
TEST(Combinatorics, AlternatingBinomialSum) {
  for (int n = 1; n <= 8; ++n) {
    mpz_class total = 0;
    for (int k = 0; k <= n; ++k) {
      const mpz_class t = binomial(n, k) * binomial(2 * n - 2 * k, n - 1);
      total += (k % 2 == 0) ? t : mpz_class(-t);
    }
    EXPECT_EQ(total, 0) << "n=" << n;
  }
}
