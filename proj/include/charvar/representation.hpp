#pragma once

#include <cstdint>
#include <vector>

#include "charvar/matgroup.hpp"

namespace charvar {

/// A point of Hom(F_r, G) = G^r: r generators sharing one group.
class Representation {
 public:
  explicit Representation(std::vector<GroupElement> gens);

  const GroupSpec& spec() const noexcept { return gens_.front().spec(); }
  int rank() const noexcept { return static_cast<int>(gens_.size()); }
  const std::vector<GroupElement>& gens() const noexcept { return gens_; }
  const GroupElement& operator[](int i) const { return gens_.at(static_cast<std::size_t>(i)); }

  /// (h g_1 h^-1, ..., h g_r h^-1). h must be invertible; membership of the
  /// results is re-verified.
  Representation conjugated(const CMat& h) const;
  Representation conjugated(const CMat& h, const CMat& h_inv) const;

 private:
  std::vector<GroupElement> gens_;
};

/// r generators drawn with sample_element from a seed stream.
Representation sample_representation(const GroupSpec& spec, int rank, std::uint64_t seed,
                                     double scale);

/// Traces of every positive word of length 1..max_length in the generators,
/// in depth-first order of the index sequence. Conjugation invariant.
std::vector<Complex> trace_words(const Representation& rho, int max_length = 3);

/// Largest absolute group_membership over the generators.
double membership_defect(const Representation& rho);

}  // namespace charvar
