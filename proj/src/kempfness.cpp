#include "charvar/kempfness.hpp"

#include <cmath>
#include <limits>

namespace charvar {

CMat kn_residual(const Representation& rho) {
  const auto n = rho.spec().n();
  CMat mu = CMat::Zero(n, n);
  for (const auto& g : rho.gens()) {
    const CMat& m = g.mat();
    mu.noalias() += m * m.adjoint();
    mu.noalias() -= m.adjoint() * m;
  }
  return canonicalize(rho.spec(), (mu + mu.adjoint()) / 2.0);
}

CMat kn_gradient(const Representation& rho) { return project_to_p(rho.spec(), kn_residual(rho)); }

bool kn_membership(const Representation& rho, double tol) {
  if (!(tol > 0.0)) throw ValidationError("kn_membership: tol must be positive");
  double scale = 1.0;
  for (const auto& g : rho.gens()) scale += g.mat().squaredNorm();
  return kn_residual(rho).norm() < tol * scale;
}

double orbit_norm(const Representation& rho) {
  double total = 0.0;
  for (const auto& g : rho.gens()) total += g.mat().squaredNorm();
  return 0.5 * total;
}

double directional_derivative(const Representation& rho, const LieVector& direction) {
  if (!(direction.spec() == rho.spec())) {
    throw ValidationError("directional_derivative: direction belongs to " +
                          direction.spec().to_string() + ", representation to " +
                          rho.spec().to_string());
  }
  if (direction.part() != Part::p_part) {
    throw ValidationError("directional_derivative: direction must lie in p");
  }
  const CMat mu = kn_residual(rho);
  return (direction.mat().adjoint() * mu).trace().real();
}

void KNFlowParams::validate() const {
  if (!(step > 0.0)) throw ValidationError("KNFlowParams: step must be positive");
  if (max_iters < 1) throw ValidationError("KNFlowParams: max_iters must be positive");
  if (!(residual_tol > 0.0)) throw ValidationError("KNFlowParams: residual_tol must be positive");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw ValidationError("KNFlowParams: backtrack_factor must lie in (0,1)");
  }
  if (max_halvings < 0) throw ValidationError("KNFlowParams: max_halvings must be >= 0");
  if (stagnation_window < 1) throw ValidationError("KNFlowParams: stagnation_window must be >= 1");
  if (!(max_exponent > 0.0)) throw ValidationError("KNFlowParams: max_exponent must be positive");
  if (trace_every < 0) throw ValidationError("KNFlowParams: trace_every must be >= 0");
  for (double s : schedule) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("KNFlowParams: schedule steps must be positive");
  }
}

std::string_view verdict_name(FlowVerdict verdict) noexcept {
  switch (verdict) {
    case FlowVerdict::kn_point:
      return "kn_point";
    case FlowVerdict::norm_plateau_orbit_not_closed:
      return "norm_plateau_orbit_not_closed";
    case FlowVerdict::max_iters:
      return "max_iters";
  }
  return "?";
}

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kPlateauDecrease = 1e-12;
constexpr double kNoiseUlps = 256.0;
constexpr double kResidualShrink = 0.5;

}  // namespace

KNFlowResult kn_flow(const Representation& rho0, const KNFlowParams& params) {
  params.validate();
  const GroupSpec& spec = rho0.spec();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  Representation rho = rho0;
  FlowTrace trace;
  trace.record(0.0, rho);
  double last_recorded = 0.0;

  double norm = orbit_norm(rho);
  std::vector<double> history{norm};
  std::vector<double> grad_history;
  double eta = params.step;
  CMat prev_grad;
  double prev_step = 0.0;
  std::vector<double> steps;
  const bool replay = !params.schedule.empty();
  int iter = 0;
  FlowVerdict verdict = FlowVerdict::max_iters;
  bool converged = false;

  for (;; ++iter) {
    const CMat grad = kn_gradient(rho);
    const double gnorm = grad.norm();
    grad_history.push_back(gnorm);
    if (gnorm < params.residual_tol) {
      converged = true;
      verdict = FlowVerdict::kn_point;
      break;
    }
    if (iter >= params.max_iters) break;
    const auto window = static_cast<std::size_t>(params.stagnation_window);
    if (history.size() > window && history[history.size() - 1 - window] - norm < kPlateauDecrease &&
        gnorm > 10.0 * params.residual_tol && gnorm > kResidualShrink * grad_history[grad_history.size() - 1 - window]) {
      verdict = FlowVerdict::norm_plateau_orbit_not_closed;
      break;
    }

    // Barzilai-Borwein step from the last accepted move s = -prev_step * prev_grad.
    if (prev_step > 0.0) {
      const CMat y = grad - prev_grad;
      const double sy = -prev_step * (prev_grad.adjoint() * y).trace().real();
      const double yy = y.squaredNorm();
      if (sy > 0.0 && yy > 0.0) eta = sy / yy;
    }

    const HermitianEigen eig = hermitian_eigen(grad);
    auto step_to = [&](double s) {
      const CMat h = canonicalize(spec, eig.apply([&](double x) { return std::exp(-s * x); }));
      const CMat h_inv = canonicalize(spec, eig.apply([&](double x) { return std::exp(s * x); }));
      return rho.conjugated(h, h_inv);
    };

    if (replay) {
      if (static_cast<std::size_t>(iter) >= params.schedule.size()) break;
      const double s = params.schedule[static_cast<std::size_t>(iter)];
      rho = step_to(s);
      norm = orbit_norm(rho);
      steps.push_back(s);
      history.push_back(norm);
      if (params.trace_every > 0 && (iter + 1) % params.trace_every == 0) {
        last_recorded = static_cast<double>(iter + 1);
        trace.record(last_recorded, rho);
      }
      continue;
    }

    const double spectral = eig.values.cwiseAbs().maxCoeff();
    double trial = std::min(eta, params.max_exponent / spectral);
    const double slope = gnorm * gnorm;

    bool accepted = false;
    int halvings = 0;
    for (; halvings <= params.max_halvings; ++halvings) {
      Representation candidate = step_to(trial);
      const double candidate_norm = orbit_norm(candidate);
      const double predicted = kArmijo * trial * slope;
      // Near rounding level of the norm the Armijo test only sees noise; there a
      // step must not measurably raise the norm and must shrink the gradient.
      const bool noisy = predicted <= kNoiseUlps * eps * norm;
      const bool ok = noisy ? candidate_norm <= norm * (1.0 + kNoiseUlps * eps) &&
                                  kn_gradient(candidate).norm() < gnorm
                            : candidate_norm <= norm - predicted;
      if (ok) {
        rho = std::move(candidate);
        norm = candidate_norm;
        accepted = true;
        break;
      }
      trial *= params.backtrack_factor;
    }
    if (!accepted) {
      verdict = FlowVerdict::norm_plateau_orbit_not_closed;
      break;
    }
    eta = halvings == 0 ? trial / params.backtrack_factor : trial;
    prev_grad = grad;
    prev_step = trial;
    steps.push_back(trial);
    history.push_back(norm);

    if (params.trace_every > 0 && (iter + 1) % params.trace_every == 0) {
      last_recorded = static_cast<double>(iter + 1);
      trace.record(last_recorded, rho);
    }
  }

  if (static_cast<double>(iter) > last_recorded) trace.record(static_cast<double>(iter), rho);

  return KNFlowResult{std::move(rho), converged, iter, std::move(trace), verdict, std::move(steps)};
}

}  // namespace charvar
