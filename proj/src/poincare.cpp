#include "charvar/poincare.hpp"

namespace charvar {

namespace {

void check_rank(int r) {
  if (r < 1 || r > kMaxPoincareRank) {
    throw ValidationError("rank r must be in [1, " + std::to_string(kMaxPoincareRank) + "], got " +
                          std::to_string(r));
  }
}

PolyQ poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return PolyQ(std::move(c));
}

RatQ frac(PolyQ num, PolyQ den) { return RatQ(std::move(num), std::move(den)); }

PolyQ certified(const RatQ& x) {
  PolyQ p = to_polynomial(x);
  certify_nonnegative_integral(p);
  return p;
}

}  // namespace

std::string_view tag_name(GroupFamilyTag tag) noexcept {
  switch (tag) {
    case GroupFamilyTag::SU2: return "SU2";
    case GroupFamilyTag::U2: return "U2";
    case GroupFamilyTag::U21: return "U21";
    case GroupFamilyTag::U22: return "U22";
    case GroupFamilyTag::Sp4R: return "Sp4R";
    case GroupFamilyTag::GL2C: return "GL2C";
    case GroupFamilyTag::SL2C: return "SL2C";
    case GroupFamilyTag::SO3: return "SO3";
    case GroupFamilyTag::O3: return "O3";
    case GroupFamilyTag::SL3R: return "SL3R";
    case GroupFamilyTag::SO3C: return "SO3C";
    case GroupFamilyTag::GL3R: return "GL3R";
    case GroupFamilyTag::O3C: return "O3C";
    case GroupFamilyTag::SO0_23: return "SO0_23";
    case GroupFamilyTag::SO0_33: return "SO0_33";
    case GroupFamilyTag::SO2: return "SO2";
    case GroupFamilyTag::SL2R: return "SL2R";
  }
  return "?";
}

GroupFamilyTag parse_tag(std::string_view name) {
  for (GroupFamilyTag tag : kAllFamilyTags) {
    if (tag_name(tag) == name) return tag;
  }
  throw ValidationError("unknown group family tag '" + std::string(name) + "'");
}

PolyQ baird_su2(int r) {
  check_rank(r);
  const RatQ half = frac(PolyQ(1), PolyQ(2));
  const RatQ t3_half = RatQ(PolyQ::monomial(Rational(1), 3)) * half;
  const RatQ value = RatQ(poly({1, 1})) -
                     frac(PolyQ::t() * poly({1, 0, 0, 1}).pow(r), poly({1, 0, 0, 0, -1})) +
                     t3_half * (frac(poly({1, 1}).pow(r), poly({1, 0, -1})) -
                                frac(poly({1, -1}).pow(r), poly({1, 0, 1})));
  return certified(value);
}

PolyQ poincare_u2(int r) {
  check_rank(r);
  const RatQ half = frac(PolyQ(1), PolyQ(2));
  const RatQ t3_half = RatQ(PolyQ::monomial(Rational(1), 3)) * half;
  const RatQ value = RatQ(poly({1, 1}).pow(r + 1)) -
                     frac(PolyQ::t() * poly({1, 1, 0, 1, 1}).pow(r), poly({1, 0, 0, 0, -1})) +
                     t3_half * (frac(poly({1, 1}).pow(2 * r), poly({1, 0, -1})) -
                                frac(poly({1, 0, -1}).pow(r), poly({1, 0, 1})));
  return certified(value);
}

PolyQ poincare_polynomial(GroupFamilyTag tag, int r) {
  check_rank(r);
  const PolyQ torus = poly({1, 1}).pow(r);
  const PolyQ components = PolyQ(2).pow(r);
  PolyQ result;
  switch (tag) {
    case GroupFamilyTag::SU2:
    case GroupFamilyTag::SO3:
    case GroupFamilyTag::SL3R:
    case GroupFamilyTag::SO3C:
    case GroupFamilyTag::SL2C:
      result = baird_su2(r);
      break;
    case GroupFamilyTag::O3:
    case GroupFamilyTag::GL3R:
    case GroupFamilyTag::O3C:
      result = components * baird_su2(r);
      break;
    case GroupFamilyTag::U2:
    case GroupFamilyTag::Sp4R:
    case GroupFamilyTag::GL2C:
      result = poincare_u2(r);
      break;
    case GroupFamilyTag::U21:
      result = poincare_u2(r) * torus;
      break;
    case GroupFamilyTag::U22:
      result = poincare_u2(r).pow(2);
      break;
    case GroupFamilyTag::SO0_23:
      result = baird_su2(r) * torus;
      break;
    case GroupFamilyTag::SO0_33:
      result = baird_su2(r).pow(2);
      break;
    case GroupFamilyTag::SO2:
    case GroupFamilyTag::SL2R:
      result = torus;
      break;
  }
  certify_nonnegative_integral(result);
  return result;
}

void certify_nonnegative_integral(const PolyQ& p) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c < 0 || denominator(c) != 1) {
      throw Error("not_integral", "coefficient of t^" + std::to_string(i) + " is " + c.str() +
                                      ", not a nonnegative integer");
    }
  }
}

std::vector<std::string> coefficient_strings(const PolyQ& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace charvar
