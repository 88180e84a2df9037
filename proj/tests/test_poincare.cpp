#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "charvar/poincare.hpp"

using namespace charvar;

namespace {

PolyQ poly(const std::vector<long long>& coeffs) {
  std::vector<Rational> c;
  for (long long x : coeffs) c.emplace_back(x);
  return PolyQ(std::move(c));
}

PolyQ one_plus_t(int r) { return poly({1, 1}).pow(r); }

// Coefficients of Baird's formula expanded independently with a computer
// algebra system, lowest degree first.
const std::map<int, std::vector<long long>>& baird_reference() {
  static const std::map<int, std::vector<long long>> table{
      {1, {1}},
      {2, {1}},
      {3, {1, 0, 0, 0, 0, 0, 1}},
      {4, {1, 0, 0, 0, 0, 0, 4, 0, 0, 1}},
      {5, {1, 0, 0, 0, 0, 0, 10, 0, 1, 5, 0, 0, 1}},
      {6, {1, 0, 0, 0, 0, 0, 20, 0, 6, 15, 0, 1, 6, 0, 0, 1}},
      {7, {1, 0, 0, 0, 0, 0, 35, 0, 21, 35, 1, 7, 21, 0, 1, 7, 0, 0, 1}},
      {12, {1,   0,   0,   0,   0,   0,   220, 0,   792, 495, 792, 924, 1012, 495, 804, 990, 220,
            496, 804, 66,  220, 496, 12,  66,  220, 1,   12,  66,  0,   1,    12,  0,   0,   1}},
  };
  return table;
}

}  // namespace

TEST(Tags, NamesRoundTrip) {
  for (GroupFamilyTag tag : kAllFamilyTags) EXPECT_EQ(parse_tag(tag_name(tag)), tag);
  EXPECT_THROW(parse_tag("su2"), ValidationError);
  EXPECT_THROW(parse_tag("SU3"), ValidationError);
}

TEST(Baird, Examples) {
  EXPECT_EQ(baird_su2(1), PolyQ(1));
  EXPECT_EQ(baird_su2(2), PolyQ(1));
  EXPECT_EQ(baird_su2(3), poly({1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(baird_su2(3).to_string(), "1 + t^6");
}

TEST(Baird, MatchesReferenceExpansion) {
  for (const auto& [r, coeffs] : baird_reference()) EXPECT_EQ(baird_su2(r), poly(coeffs)) << "r=" << r;
}

TEST(Baird, DegreeBound) {
  for (int r = 2; r <= 20; ++r) EXPECT_LE(baird_su2(r).degree(), 3 * r - 3) << r;
  EXPECT_EQ(baird_su2(3).degree(), 6);
  for (int r = 4; r <= 20; ++r) EXPECT_EQ(baird_su2(r).degree(), 3 * r - 3) << r;
}

TEST(Baird, RankRange) {
  EXPECT_THROW(baird_su2(0), ValidationError);
  EXPECT_THROW(baird_su2(-1), ValidationError);
  EXPECT_THROW(baird_su2(kMaxPoincareRank + 1), ValidationError);
  const PolyQ top = baird_su2(kMaxPoincareRank);
  EXPECT_EQ(top.degree(), 3 * kMaxPoincareRank - 3);
  EXPECT_NO_THROW(certify_nonnegative_integral(top));
}

TEST(PoincareU2, Examples) {
  EXPECT_EQ(poincare_u2(1), poly({1, 1}));
  EXPECT_EQ(poincare_u2(2), poly({1, 2, 1}));
  EXPECT_EQ(poincare_u2(3), poly({1, 0, 0, 0, 0, 0, 1}) * one_plus_t(3));
}

TEST(PoincareU2, EqualsBairdTimesTorus) {
  for (int r = 1; r <= 12; ++r) EXPECT_EQ(poincare_u2(r), baird_su2(r) * one_plus_t(r)) << r;
}

TEST(PoincarePolynomial, Examples) {
  EXPECT_EQ(poincare_polynomial(GroupFamilyTag::O3, 2), PolyQ(4));
  const PolyQ u2_3 = poly({1, 0, 0, 0, 0, 0, 1}) * one_plus_t(3);
  EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U22, 3), u2_3 * u2_3);
  EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SL2R, 5), one_plus_t(5));
  EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U22, 2), poly({1, 4, 6, 4, 1}));
}

TEST(PoincarePolynomial, DispatchTable) {
  for (int r = 1; r <= 6; ++r) {
    const PolyQ b = baird_su2(r);
    const PolyQ u = poincare_u2(r);
    const PolyQ torus = one_plus_t(r);
    const PolyQ two_r = PolyQ(2).pow(r);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SU2, r), b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SO3, r), b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SL3R, r), b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SO3C, r), b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SL2C, r), b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::O3, r), two_r * b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::GL3R, r), two_r * b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::O3C, r), two_r * b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U2, r), u);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::Sp4R, r), u);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::GL2C, r), u);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U21, r), u * torus);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U22, r), u * u);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SO0_23, r), b * torus);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SO0_33, r), b * b);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SO2, r), torus);
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::SL2R, r), torus);
  }
}

TEST(PoincarePolynomial, IntegralNonnegativeAndComponentCount) {
  for (GroupFamilyTag tag : kAllFamilyTags) {
    const bool disconnected =
        tag == GroupFamilyTag::O3 || tag == GroupFamilyTag::GL3R || tag == GroupFamilyTag::O3C;
    for (int r = 1; r <= 12; ++r) {
      const PolyQ p = poincare_polynomial(tag, r);
      EXPECT_NO_THROW(certify_nonnegative_integral(p));
      EXPECT_EQ(p.coeff(0), disconnected ? Rational(BigInt(1) << r) : Rational(1)) << tag_name(tag) << " r=" << r;
    }
  }
}

TEST(PoincarePolynomial, ProductIdentities) {
  for (int r = 1; r <= 12; ++r) {
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U21, r), poincare_u2(r) * one_plus_t(r));
    EXPECT_EQ(poincare_polynomial(GroupFamilyTag::U22, r), poincare_u2(r).pow(2));
  }
}

TEST(PoincarePolynomial, EulerCharacteristicAtMinusOne) {
  // χ(S^6) = 2; a (1+t)^r factor makes χ vanish.
  EXPECT_EQ(baird_su2(3).evaluate(Rational(-1)), Rational(2));
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(poincare_u2(r).evaluate(Rational(-1)), Rational(0));
}

TEST(Certify, RejectsFractionsAndNegatives) {
  EXPECT_THROW(certify_nonnegative_integral(poly({1, -1})), Error);
  EXPECT_THROW(certify_nonnegative_integral(PolyQ(std::vector<Rational>{Rational(1, 2)})), Error);
  EXPECT_NO_THROW(certify_nonnegative_integral(poly({0, 3, 0, 1})));
}

TEST(CoefficientStrings, Decimal) {
  EXPECT_EQ(coefficient_strings(baird_su2(3)), (std::vector<std::string>{"1", "0", "0", "0", "0", "0", "1"}));
  EXPECT_TRUE(coefficient_strings(PolyQ()).empty());
}
