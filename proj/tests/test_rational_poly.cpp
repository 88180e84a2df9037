#include <gtest/gtest.h>

#include <random>

#include "charvar/rational_poly.hpp"

using namespace charvar;

namespace {

PolyQ poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return PolyQ(std::move(c));
}

PolyQ random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return PolyQ(std::move(c));
}

}  // namespace

TEST(PolyQ, CanonicalForm) {
  EXPECT_TRUE(PolyQ().is_zero());
  EXPECT_EQ(PolyQ().degree(), -1);
  EXPECT_TRUE(poly({0, 0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(poly({1, 2, 0}), poly({1, 2}));
  EXPECT_EQ(PolyQ(0), PolyQ());
  EXPECT_EQ(PolyQ::monomial(Rational(3), 2), poly({0, 0, 3}));
  EXPECT_THROW(PolyQ().leading(), ValidationError);
}

TEST(PolyQ, Arithmetic) {
  const PolyQ a = poly({1, 1});
  const PolyQ b = poly({1, -1});
  EXPECT_EQ(a * b, poly({1, 0, -1}));
  EXPECT_EQ(a + b, PolyQ(2));
  EXPECT_EQ(a - a, PolyQ());
  EXPECT_EQ(-a, poly({-1, -1}));
  EXPECT_EQ(a.pow(3), poly({1, 3, 3, 1}));
  EXPECT_EQ(a.pow(0), PolyQ(1));
  EXPECT_EQ(a.evaluate(Rational(1, 2)), Rational(3, 2));
}

TEST(PolyQ, ToString) {
  EXPECT_EQ(PolyQ().to_string(), "0");
  EXPECT_EQ(poly({1, 0, 0, 0, 0, 0, 1}).to_string(), "1 + t^6");
  EXPECT_EQ(poly({0, 1}).to_string(), "t");
  EXPECT_EQ(poly({-1, 0, 4}).to_string(), "-1 + 4*t^2");
  EXPECT_EQ(poly({2, -1, -3}).to_string(), "2 - t - 3*t^2");
  EXPECT_EQ(PolyQ(std::vector<Rational>{Rational(1, 2)}).to_string(), "1/2");
}

TEST(PolyQ, DivmodProperty) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const PolyQ a = random_poly(rng, 8);
    PolyQ b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(poly({1, 1}).divmod(PolyQ()), ValidationError);
}

TEST(PolyQ, GcdIsMonicCommonDivisor) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const PolyQ common = random_poly(rng, 3);
    const PolyQ a = common * random_poly(rng, 4);
    const PolyQ b = common * random_poly(rng, 4);
    const PolyQ g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      EXPECT_TRUE(g.is_zero());
      continue;
    }
    EXPECT_EQ(g.leading(), Rational(1));
    EXPECT_TRUE(a.divmod(g).second.is_zero());
    EXPECT_TRUE(b.divmod(g).second.is_zero());
    if (!common.is_zero()) {
      EXPECT_TRUE(g.divmod(common.monic()).second.is_zero());
    }
  }
  EXPECT_EQ(gcd(poly({-1, 0, 1}), poly({1, 1})), poly({1, 1}));
}

TEST(RatQ, Examples) {
  const RatQ inv_one_minus_t(PolyQ(1), poly({1, -1}));
  EXPECT_EQ(inv_one_minus_t * RatQ(poly({1, -1})), RatQ(PolyQ(1)));

  const RatQ reduced(poly({1, 1}), poly({1, 0, -1}));
  EXPECT_EQ(reduced, inv_one_minus_t);
  EXPECT_EQ(reduced.num(), PolyQ(-1));
  EXPECT_EQ(reduced.den(), poly({-1, 1}));

  const RatQ x(poly({0, 1}), poly({1, 0, 0, 0, -1}));
  EXPECT_EQ(x + x, RatQ(poly({0, 2}), poly({1, 0, 0, 0, -1})));
  EXPECT_EQ(x - x, RatQ());
  EXPECT_EQ((x / x), RatQ(PolyQ(1)));
}

TEST(RatQ, Normalization) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const PolyQ n = random_poly(rng, 5);
    const PolyQ d = random_poly(rng, 5);
    if (d.is_zero()) continue;
    const RatQ x(n, d);
    EXPECT_EQ(x.den().leading(), Rational(1));
    EXPECT_EQ(gcd(x.num(), x.den()).degree(), x.num().is_zero() ? x.den().degree() : 0);
    // n/d == x.num/x.den as cross products
    EXPECT_EQ(n * x.den(), x.num() * d);
  }
}

TEST(RatQ, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(5);
  auto sample = [&] {
    PolyQ d;
    while (d.is_zero()) d = random_poly(rng, 3);
    return RatQ(random_poly(rng, 3), d);
  };
  for (int i = 0; i < 100; ++i) {
    const RatQ a = sample(), b = sample(), c = sample();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.num().is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(RatQ, Errors) {
  EXPECT_THROW(RatQ(PolyQ(1), PolyQ()), ValidationError);
  EXPECT_THROW(RatQ(PolyQ(1)) / RatQ(), ValidationError);
}

TEST(ToPolynomial, Examples) {
  EXPECT_EQ(to_polynomial(RatQ(poly({1, 0, 0, 0, -1}), poly({1, -1}))), poly({1, 1, 1, 1}));
  try {
    to_polynomial(RatQ(PolyQ(1), poly({1, -1})));
    FAIL() << "expected NotPolynomial";
  } catch (const NotPolynomial& e) {
    EXPECT_FALSE(e.remainder().is_zero());
    EXPECT_EQ(e.code(), "not_polynomial");
  }
}
