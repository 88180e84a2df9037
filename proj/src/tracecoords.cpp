#include "charvar/tracecoords.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace charvar {

namespace {

void check_unimodular(const CMat2& A, const char* what) {
  const double defect = std::abs(A.determinant() - 1.0);
  if (!(defect <= 1e-9 * (1.0 + A.squaredNorm()))) {
    throw ValidationError(std::string(what) + ": matrix must have determinant 1");
  }
}

void check_unimodular(const Mat2& A, const char* what) {
  check_unimodular(CMat2(A.cast<Complex>()), what);
}

struct Components {
  double t, s, q, p;
};

Components components(const Mat2& A) {
  return {(A(0, 0) + A(1, 1)) / 2.0, (A(0, 0) - A(1, 1)) / 2.0, (A(1, 0) + A(0, 1)) / 2.0,
          (A(1, 0) - A(0, 1)) / 2.0};
}

Mat2 real_2x2(const GroupElement& g) {
  if (!(g.spec() == GroupSpec::make(Family::SL_R, 2))) {
    throw ValidationError("expected an SL_R(2) element, got " + g.spec().to_string());
  }
  return g.mat().real();
}

/// Boundary band: the deciding quantity is within a factor 10 of tol.
bool in_band(double value, double tol) { return value > tol / 10.0 && value <= tol * 10.0; }

struct EigenCandidate {
  Eigen::Vector2cd v;
  double residual;
};

/// Eigenvector of the least scalar generator that is closest to being an
/// eigenvector of every generator.
EigenCandidate best_common_eigenvector(const std::vector<Mat2>& gens) {
  const Mat2* pivot = nullptr;
  double pivot_size = -1.0;
  for (const auto& A : gens) {
    const double size = (A - 0.5 * A.trace() * Mat2::Identity()).norm();
    if (size > pivot_size) {
      pivot_size = size;
      pivot = &A;
    }
  }
  Eigen::ComplexEigenSolver<CMat2> solver(pivot->cast<Complex>());

  EigenCandidate best{Eigen::Vector2cd(1.0, 0.0), std::numeric_limits<double>::infinity()};
  for (int c = 0; c < 2; ++c) {
    Eigen::Vector2cd v = solver.eigenvectors().col(c).normalized();
    double worst = 0.0;
    for (const auto& A : gens) {
      const Eigen::Vector2cd Av = A.cast<Complex>() * v;
      const Complex lambda = v.dot(Av);
      worst = std::max(worst, (Av - lambda * v).norm() / std::max(1.0, A.norm()));
    }
    if (worst < best.residual) best = {v, worst};
  }
  return best;
}

/// 2|Im(v1 conj(v2))| for unit v: zero iff v spans a real line.
double realness(const Eigen::Vector2cd& v) {
  return 2.0 * std::abs((v(0) * std::conj(v(1))).imag());
}

}  // namespace

TraceCoordsR1 trace_pfaffian(const Mat2& A) {
  return {(A(0, 0) + A(1, 1)) / 2.0, (A(1, 0) - A(0, 1)) / 2.0};
}

double distance_to_r1_image(const TraceCoordsR1& c) {
  const double at = std::abs(c.t);
  const double to_rays = at >= 1.0 ? std::abs(c.p) : std::hypot(at - 1.0, c.p);
  const double to_circle = std::abs(std::hypot(c.t, c.p) - 1.0);
  return std::min(to_rays, to_circle);
}

FrickeCoords fricke_coords(const CMat2& A1, const CMat2& A2) {
  check_unimodular(A1, "fricke_coords");
  check_unimodular(A2, "fricke_coords");
  return {A1.trace(), A2.trace(), (A1 * A2).trace()};
}

std::string_view point_class_name(PointClass c) noexcept {
  switch (c) {
    case PointClass::su2:
      return "su2";
    case PointClass::sl2r:
      return "sl2r";
    case PointClass::reducible_boundary:
      return "reducible_boundary";
  }
  return "?";
}

PointClass classify_point_r2(double t1, double t2, double t3, double tol) {
  const double k = kappa(t1, t2, t3);
  if (std::abs(k - 2.0) <= tol) return PointClass::reducible_boundary;
  const bool in_box =
      std::abs(t1) <= 2.0 + tol && std::abs(t2) <= 2.0 + tol && std::abs(t3) <= 2.0 + tol;
  if (in_box && k <= 2.0 - tol) return PointClass::su2;
  return PointClass::sl2r;
}

KNInvariantsR2 kn_invariants_r2(const Mat2& A1, const Mat2& A2) {
  check_unimodular(A1, "kn_invariants_r2");
  check_unimodular(A2, "kn_invariants_r2");
  const auto c1 = trace_pfaffian(A1);
  const auto c2 = trace_pfaffian(A2);
  const auto c3 = trace_pfaffian(A1 * A2);
  return {c1.t, c2.t, c3.t, c1.p, c2.p, c3.p};
}

std::pair<double, double> product_invariants_from_components(const Mat2& A1, const Mat2& A2) {
  const Components a = components(A1);
  const Components b = components(A2);
  const double t3 = a.t * b.t - a.p * b.p + a.s * b.s + a.q * b.q;
  const double p3 = a.p * b.t + a.t * b.p + a.q * b.s - a.s * b.q;
  return {t3, p3};
}

std::array<double, 4> kn_image_equations_r2(const KNInvariantsR2& v) {
  const double d1 = v.delta1();
  const double d2 = v.delta2();
  const double shear = v.t2 * v.p1 + v.t1 * v.p2 - v.p3;
  // The p3 term enters with a plus sign; with a minus sign the last equation
  // is not in the elimination ideal of the Kempf-Ness set.
  return {
      v.p1 * shear,
      v.p2 * shear,
      v.p1 * v.p1 * d1 - v.p2 * v.p2 * d2,
      v.p2 * v.p2 * (d1 * (v.p1 * v.p1 - v.t1 * v.t1) - d2 * (v.p2 * v.p2 - v.t2 * v.t2)) +
          v.p3 * d1 * (v.t1 * v.p2 - v.t2 * v.p1),
  };
}

TripleCoords triple_coords(const CMat2& A1, const CMat2& A2, const CMat2& A3) {
  check_unimodular(A1, "triple_coords");
  check_unimodular(A2, "triple_coords");
  check_unimodular(A3, "triple_coords");
  const CMat2 a12 = A1 * A2;
  return {{A1.trace(), A2.trace(), A3.trace(), a12.trace(), (A1 * A3).trace(), (A2 * A3).trace(),
           (a12 * A3).trace()}};
}

std::string_view rep_class_name(RepClass c) noexcept {
  switch (c) {
    case RepClass::absolutely_irreducible:
      return "absolutely_irreducible";
    case RepClass::r_irreducible_c_reducible:
      return "r_irreducible_c_reducible";
    case RepClass::r_reducible:
      return "r_reducible";
  }
  return "?";
}

RepClassification classify_sl2r_rep(const Representation& rho, double tol) {
  if (!(tol > 0.0)) throw ValidationError("classify_sl2r_rep: tol must be positive");
  std::vector<Mat2> gens;
  for (const auto& g : rho.gens()) gens.push_back(real_2x2(g));

  RepClassification out{RepClass::r_reducible};
  bool reducible_over_c = false;
  const EigenCandidate common = best_common_eigenvector(gens);

  if (gens.size() == 2) {
    const double k = kappa(gens[0].trace(), gens[1].trace(), (gens[0] * gens[1]).trace());
    out.reducibility_margin = std::abs(k - 2.0);
    reducible_over_c = out.reducibility_margin <= tol;
  } else {
    out.reducibility_margin = common.residual;
    reducible_over_c = common.residual <= tol;
  }
  out.boundary = in_band(out.reducibility_margin, tol);

  if (!reducible_over_c) {
    out.cls = RepClass::absolutely_irreducible;
    return out;
  }
  out.realness_margin = realness(common.v);
  out.boundary = out.boundary || in_band(out.realness_margin, tol);
  out.cls = out.realness_margin <= tol ? RepClass::r_reducible : RepClass::r_irreducible_c_reducible;
  return out;
}

}  // namespace charvar
