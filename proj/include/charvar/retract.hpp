#pragma once

#include "charvar/flow_trace.hpp"
#include "charvar/matgroup.hpp"
#include "charvar/representation.hpp"

namespace charvar {

/// The path t -> f_t(g) = k exp((1 - t) X) from g (t = 0) to its compact
/// factor k (t = 1). Caches the polar decomposition so each evaluation costs
/// one scalar exponential per eigenvalue.
class PolarRetraction {
 public:
  explicit PolarRetraction(const GroupElement& g);

  /// f_t(g); throws ValidationError unless 0 <= t <= 1. f_0 returns g itself.
  GroupElement at(double t) const;

  const GroupElement& compact_factor() const noexcept { return k_; }

 private:
  PolarRetraction(const GroupElement& g, PolarFactors polar);

  GroupElement g_;
  GroupElement k_;
  HermitianEigen x_eigen_;
};

GroupElement retract_point(const GroupElement& g, double t);

/// Applies retract_point to each generator.
Representation retract_tuple(const Representation& rho, double t);

/// Samples the retraction at t = 0, 1/steps, ..., 1.
FlowTrace retract_trajectory(const Representation& rho, int steps = 64);

inline constexpr double kCompactLandingTol = 1e-9;
inline constexpr double kSweepMembershipTol = 1e-8;
inline constexpr double kEquivarianceTol = 1e-9;

/// Defects of the retraction contract on one tuple.
struct RetractionReport {
  /// The t = 0 state equals the input entry for entry.
  bool identity_at_zero = false;
  /// max_i |Theta(f_1(g_i)) - f_1(g_i)|_F.
  double compact_defect = 0.0;
  /// Largest membership_defect over the sampled states.
  double sweep_membership = 0.0;
  /// max over t in {1/4, 1/2, 3/4, 1} of |f_t(h g h^-1) - h f_t(g) h^-1|_F.
  double equivariance_defect = 0.0;

  bool passed() const noexcept {
    return identity_at_zero && compact_defect < kCompactLandingTol &&
           sweep_membership < kSweepMembershipTol && equivariance_defect < kEquivarianceTol;
  }
};

/// Checks `trajectory` (from retract_trajectory(rho, ...)) and conjugation by
/// the compact element h.
RetractionReport verify_retraction(const Representation& rho, const FlowTrace& trajectory,
                                   const GroupElement& h);

}  // namespace charvar
