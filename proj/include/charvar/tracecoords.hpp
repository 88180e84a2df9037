#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "charvar/representation.hpp"
#include "charvar/trace_polynomials.hpp"

namespace charvar {

using Mat2 = Eigen::Matrix2d;
using CMat2 = Eigen::Matrix2cd;

/// Default absolute width of the boundary bands used by the classifiers.
inline constexpr double kBoundaryTol = 1e-8;

/// Half-trace and half-Pfaffian of a real 2x2 matrix, Pf([[a,b],[c,d]]) = c - b.
struct TraceCoordsR1 {
  double t = 0.0;
  double p = 0.0;
};

TraceCoordsR1 trace_pfaffian(const Mat2& A);

/// Distance from (t, p) to {p = 0, |t| >= 1} ∪ {t^2 + p^2 = 1}, the image of
/// the normal elements of SL(2,R).
double distance_to_r1_image(const TraceCoordsR1& c);

/// (tr A1, tr A2, tr A1A2).
struct FrickeCoords {
  Complex t1, t2, t3;
};

/// Requires det A1 = det A2 = 1 (to 1e-9 relative).
FrickeCoords fricke_coords(const CMat2& A1, const CMat2& A2);

/// tr(A1 A2 A1^-1 A2^-1) in Fricke coordinates.
template <typename T>
T kappa(const T& t1, const T& t2, const T& t3) {
  return t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 - T(2);
}

enum class PointClass { su2, sl2r, reducible_boundary };

std::string_view point_class_name(PointClass c) noexcept;

/// Which real form a real point of the rank-2 SL(2,C) character variety
/// comes from. Points within tol of kappa = 2 are reported as
/// reducible_boundary rather than assigned to either side.
PointClass classify_point_r2(double t1, double t2, double t3, double tol = kBoundaryTol);

/// Half-traces t_i and half-Pfaffians p_i of A1, A2 and A1A2.
struct KNInvariantsR2 {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;

  double delta1() const noexcept { return 1.0 - t1 * t1 - p1 * p1; }
  double delta2() const noexcept { return 1.0 - t2 * t2 - p2 * p2; }
};

KNInvariantsR2 kn_invariants_r2(const Mat2& A1, const Mat2& A2);

/// (t3, p3) assembled from the components t, s, q, p of A1 and A2 instead of
/// from the product matrix.
std::pair<double, double> product_invariants_from_components(const Mat2& A1, const Mat2& A2);

/// Left-minus-right values of the four equations cutting out the closure of
/// the Kempf-Ness image in R^6.
std::array<double, 4> kn_image_equations_r2(const KNInvariantsR2& v);

/// t1..t7 = tr A1, tr A2, tr A3, tr A1A2, tr A1A3, tr A2A3, tr A1A2A3.
struct TripleCoords {
  std::array<Complex, 7> t;
};

TripleCoords triple_coords(const CMat2& A1, const CMat2& A2, const CMat2& A3);

template <typename T>
T hypersurface_R(const std::array<T, 7>& t) {
  return evaluate(kHypersurfaceR, t);
}

inline Complex hypersurface_R(const TripleCoords& c) { return hypersurface_R(c.t); }

template <typename T>
T reducible_quartic(const T& t1, const T& t2, const T& t5, const T& t6) {
  return evaluate(kReducibleQuartic, std::array<T, 4>{t1, t2, t5, t6});
}

inline Complex reducible_quartic(const TripleCoords& c) {
  return reducible_quartic(c.t[0], c.t[1], c.t[4], c.t[5]);
}

enum class RepClass { absolutely_irreducible, r_irreducible_c_reducible, r_reducible };

std::string_view rep_class_name(RepClass c) noexcept;

struct RepClassification {
  RepClass cls;
  /// The deciding quantity fell within a factor of 10 of tol on either side.
  bool boundary = false;
  /// |kappa - 2| for rank 2, otherwise the invariance residual of the best
  /// common eigenvector candidate.
  double reducibility_margin = 0.0;
  /// Distance of the common eigenvector from a real line (0 when real).
  double realness_margin = 0.0;
};

/// Classifies a tuple in SL(2,R) as absolutely irreducible, irreducible over
/// R but reducible over C, or reducible over R.
RepClassification classify_sl2r_rep(const Representation& rho, double tol = kBoundaryTol);

}  // namespace charvar
