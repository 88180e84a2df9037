#include "charvar/representation.hpp"

#include <algorithm>
#include <functional>

namespace charvar {

Representation::Representation(std::vector<GroupElement> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw ValidationError("representation needs at least one generator");
  const GroupSpec& spec = gens_.front().spec();
  for (const auto& g : gens_) {
    if (!(g.spec() == spec)) {
      throw ValidationError("generators must share one group: " + spec.to_string() + " vs " +
                            g.spec().to_string());
    }
  }
}

Representation Representation::conjugated(const CMat& h) const {
  Eigen::PartialPivLU<CMat> lu(h);
  return conjugated(h, lu.inverse());
}

Representation Representation::conjugated(const CMat& h, const CMat& h_inv) const {
  std::vector<GroupElement> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) {
    out.emplace_back(g.spec(), canonicalize(g.spec(), h * g.mat() * h_inv));
  }
  return Representation(std::move(out));
}

Representation sample_representation(const GroupSpec& spec, int rank, std::uint64_t seed,
                                     double scale) {
  if (rank < 1) throw ValidationError("rank must be >= 1");
  std::vector<GroupElement> gens;
  gens.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    gens.push_back(sample_element(spec, seed * 1000003ULL + static_cast<std::uint64_t>(i), scale));
  }
  return Representation(std::move(gens));
}

std::vector<Complex> trace_words(const Representation& rho, int max_length) {
  std::vector<Complex> out;
  const int r = rho.rank();
  const auto n = rho.spec().n();
  std::function<void(const CMat&, int)> extend = [&](const CMat& prefix, int depth) {
    for (int i = 0; i < r; ++i) {
      const CMat word = prefix * rho[i].mat();
      out.push_back(word.trace());
      if (depth + 1 < max_length) extend(word, depth + 1);
    }
  };
  extend(CMat::Identity(n, n), 0);
  return out;
}

double membership_defect(const Representation& rho) {
  double worst = 0.0;
  for (const auto& g : rho.gens()) worst = std::max(worst, group_membership(g.spec(), g.mat()));
  return worst;
}

}  // namespace charvar
