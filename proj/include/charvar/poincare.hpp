#pragma once

#include <array>
#include <string>
#include <string_view>

#include "charvar/rational_poly.hpp"

namespace charvar {

enum class GroupFamilyTag {
  SU2,
  U2,
  U21,
  U22,
  Sp4R,
  GL2C,
  SL2C,
  SO3,
  O3,
  SL3R,
  SO3C,
  GL3R,
  O3C,
  SO0_23,
  SO0_33,
  SO2,
  SL2R,
};

inline constexpr std::array<GroupFamilyTag, 17> kAllFamilyTags{
    GroupFamilyTag::SU2,  GroupFamilyTag::U2,     GroupFamilyTag::U21,    GroupFamilyTag::U22,
    GroupFamilyTag::Sp4R, GroupFamilyTag::GL2C,   GroupFamilyTag::SL2C,   GroupFamilyTag::SO3,
    GroupFamilyTag::O3,   GroupFamilyTag::SL3R,   GroupFamilyTag::SO3C,   GroupFamilyTag::GL3R,
    GroupFamilyTag::O3C,  GroupFamilyTag::SO0_23, GroupFamilyTag::SO0_33, GroupFamilyTag::SO2,
    GroupFamilyTag::SL2R,
};

std::string_view tag_name(GroupFamilyTag tag) noexcept;
/// Exact, case-sensitive; throws ValidationError for unknown names.
GroupFamilyTag parse_tag(std::string_view name);

inline constexpr int kMaxPoincareRank = 64;

/// Baird's formula for P_t of the SU(2) character variety of F_r.
PolyQ baird_su2(int r);

/// P_t of the U(2) character variety of F_r.
PolyQ poincare_u2(int r);

/// P_t of the G character variety of F_r for the group named by tag.
PolyQ poincare_polynomial(GroupFamilyTag tag, int r);

/// Throws Error("not_integral") unless every coefficient is a nonnegative
/// integer.
void certify_nonnegative_integral(const PolyQ& p);

/// Coefficients as decimal strings, lowest degree first.
std::vector<std::string> coefficient_strings(const PolyQ& p);

}  // namespace charvar
