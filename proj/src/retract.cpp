#include "charvar/retract.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace charvar {

namespace {

void check_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "retraction time must lie in [0,1], got " << t;
    throw ValidationError(os.str());
  }
}

}  // namespace

PolarRetraction::PolarRetraction(const GroupElement& g) : PolarRetraction(g, polar_decompose(g)) {}

PolarRetraction::PolarRetraction(const GroupElement& g, PolarFactors polar)
    : g_(g), k_(std::move(polar.k)), x_eigen_(hermitian_eigen(polar.x.mat())) {}

GroupElement PolarRetraction::at(double t) const {
  check_time(t);
  if (t == 0.0) return g_;
  const double s = 1.0 - t;
  const GroupSpec& spec = g_.spec();
  if (s == 0.0) return k_;
  const CMat e = canonicalize(spec, x_eigen_.apply([s](double x) { return std::exp(s * x); }));
  return GroupElement(spec, canonicalize(spec, k_.mat() * e));
}

GroupElement retract_point(const GroupElement& g, double t) {
  check_time(t);
  if (t == 0.0) return g;
  return PolarRetraction(g).at(t);
}

Representation retract_tuple(const Representation& rho, double t) {
  check_time(t);
  std::vector<GroupElement> out;
  out.reserve(rho.gens().size());
  for (const auto& g : rho.gens()) out.push_back(retract_point(g, t));
  return Representation(std::move(out));
}

FlowTrace retract_trajectory(const Representation& rho, int steps) {
  if (steps < 1) throw ValidationError("retract_trajectory: steps must be >= 1");
  std::vector<PolarRetraction> paths;
  paths.reserve(rho.gens().size());
  for (const auto& g : rho.gens()) paths.emplace_back(g);

  FlowTrace trace;
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    std::vector<GroupElement> gens;
    gens.reserve(paths.size());
    for (const auto& path : paths) gens.push_back(path.at(t));
    trace.record(t, Representation(std::move(gens)));
  }
  return trace;
}

RetractionReport verify_retraction(const Representation& rho, const FlowTrace& trajectory,
                                   const GroupElement& h) {
  if (trajectory.empty()) throw ValidationError("verify_retraction: empty trajectory");
  if (!(h.spec() == rho.spec())) throw ValidationError("verify_retraction: h has the wrong group");

  RetractionReport report;
  const Representation& first = trajectory.states().front();
  report.identity_at_zero = trajectory.times().front() == 0.0;
  for (int i = 0; i < rho.rank() && report.identity_at_zero; ++i) {
    report.identity_at_zero = first[i].mat() == rho[i].mat();
  }

  for (const auto& g : trajectory.states().back().gens()) {
    report.compact_defect =
        std::max(report.compact_defect, (cartan_involution(g).mat() - g.mat()).norm());
  }
  for (const auto& d : trajectory.diagnostics()) {
    report.sweep_membership = std::max(report.sweep_membership, d.membership_defect);
  }

  const CMat& hm = h.mat();
  const CMat h_inv = hm.adjoint();
  const Representation conj = rho.conjugated(hm, h_inv);
  for (double t : {0.25, 0.5, 0.75, 1.0}) {
    for (int i = 0; i < rho.rank(); ++i) {
      const CMat lhs = retract_point(conj[i], t).mat();
      const CMat rhs = hm * retract_point(rho[i], t).mat() * h_inv;
      report.equivariance_defect = std::max(report.equivariance_defect, (lhs - rhs).norm());
    }
  }
  return report;
}

}  // namespace charvar
