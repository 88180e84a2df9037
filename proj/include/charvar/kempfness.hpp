#pragma once

#include <string_view>
#include <vector>

#include "charvar/flow_trace.hpp"
#include "charvar/representation.hpp"

namespace charvar {

/// mu = sum_i (g_i g_i* - g_i* g_i). Hermitian and traceless; zero exactly on
/// the Kempf-Ness set of the conjugation action.
CMat kn_residual(const Representation& rho);

/// Projection of mu onto p, the gradient of the orbit norm along exp(sA) for
/// A in p. Equals mu whenever mu already lies in the algebra (SL_R, GL_R,
/// SL_C, GL_C and the compact families).
CMat kn_gradient(const Representation& rho);

/// |mu|_F < tol * (1 + sum_i |g_i|_F^2).
bool kn_membership(const Representation& rho, double tol);

/// F(1) = 1/2 sum_i |g_i|_F^2 for the inner product <A,B> = tr(A*B).
double orbit_norm(const Representation& rho);

/// d/ds at s = 0 of orbit_norm(exp(sA) rho exp(-sA)) = Re tr(A* mu).
/// A must be a p-part LieVector of rho's group.
double directional_derivative(const Representation& rho, const LieVector& direction);

struct KNFlowParams {
  /// Initial trial step eta; grows after steps accepted without backtracking.
  double step = 0.1;
  int max_iters = 50000;
  /// Convergence threshold on |grad|_F.
  double residual_tol = 1e-8;
  double backtrack_factor = 0.5;
  int max_halvings = 40;
  int stagnation_window = 200;
  /// Upper bound on eta * |grad|_2, i.e. on the log-condition of each
  /// conjugating matrix.
  double max_exponent = 4.0;
  /// Record every k-th iterate in the trace; 0 records only the endpoints.
  int trace_every = 0;
  /// If nonempty, iteration k takes exactly step schedule[k] with no line
  /// search, and the flow stops when the schedule runs out.
  std::vector<double> schedule;

  void validate() const;
};

enum class FlowVerdict { kn_point, norm_plateau_orbit_not_closed, max_iters };

std::string_view verdict_name(FlowVerdict verdict) noexcept;

struct KNFlowResult {
  Representation final;
  bool converged = false;
  int iterations = 0;
  FlowTrace trace;
  FlowVerdict verdict = FlowVerdict::max_iters;
  /// Accepted step sizes, one per iteration.
  std::vector<double> steps;
};

/// Descent of the orbit norm along conjugation by exp(-eta * grad) with
/// Armijo backtracking. Each iterate is conjugate to rho0, so the flow stays in
/// the G-orbit and its limit lies in the orbit closure.
KNFlowResult kn_flow(const Representation& rho0, const KNFlowParams& params = {});

}  // namespace charvar
