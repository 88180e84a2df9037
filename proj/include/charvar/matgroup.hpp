#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "charvar/types.hpp"

namespace charvar {

/// Supported matrix groups. Every family is cut out of GL(n, C) by polynomial
/// equations in the entries and is stable under g -> (g*)^-1.
enum class Family { GL_R, SL_R, SO, O, SO_pq, U, SU, U_pq, Sp_R, GL_C, SL_C, SO_C, O_C };

struct Signature {
  int p = 0;
  int q = 0;
  bool operator==(const Signature&) const = default;
};

/// Default relative tolerance for membership checks at construction.
inline constexpr double kMembershipTol = 1e-9;

/// Asymmetry below which Hermitian inputs to matrix functions are silently
/// symmetrized; above it they are rejected.
inline constexpr double kHermitianTol = 1e-9;

/// Identifies one supported group. String form is "FAMILY(n)" or
/// "FAMILY(p,q)", e.g. "SL_R(2)" or "U_pq(2,1)".
class GroupSpec {
 public:
  static GroupSpec make(Family family, int n);
  static GroupSpec make(Family family, int p, int q);
  static GroupSpec parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  const std::optional<Signature>& signature() const noexcept { return signature_; }

  std::string to_string() const;

  bool is_real() const noexcept;
  bool is_unimodular() const noexcept;
  bool is_compact() const noexcept;
  static bool has_signature(Family family) noexcept;

  /// The invariant form of the family: I_{p,q} for signature families, the
  /// standard symplectic J for Sp_R, the identity otherwise.
  CMat form() const;

  bool operator==(const GroupSpec&) const = default;

 private:
  GroupSpec(Family family, int n, std::optional<Signature> sig)
      : family_(family), n_(n), signature_(sig) {}

  Family family_;
  int n_;
  std::optional<Signature> signature_;
};

std::string_view family_name(Family family) noexcept;

/// Frobenius norm of the defining-equation defect of M. Zero iff M satisfies
/// the family's algebraic equations; identity-component membership is not
/// part of this test. Singular M yields +infinity.
double group_membership(const GroupSpec& spec, const CMat& M);

/// group_membership scaled by 1 + |M|_F^2, the quantity compared against
/// kMembershipTol when constructing elements.
double relative_membership(const GroupSpec& spec, const CMat& M);

/// Membership in the maximal compact K = G ∩ U(n).
double compact_membership(const GroupSpec& spec, const CMat& M);

/// Distance from A to the Lie algebra of spec (Frobenius norm).
double algebra_membership(const GroupSpec& spec, const CMat& A);

/// Orthogonal projections (for Re tr(A*B)) onto the Lie algebra g and onto
/// its Cartan pieces k (anti-Hermitian part) and p (Hermitian part).
CMat project_to_algebra(const GroupSpec& spec, const CMat& A);
CMat project_to_k(const GroupSpec& spec, const CMat& A);
CMat project_to_p(const GroupSpec& spec, const CMat& A);

/// Zeroes imaginary parts for real families; identity otherwise.
CMat canonicalize(const GroupSpec& spec, CMat M);

/// An element of a supported group. Immutable; membership and
/// invertibility are verified on construction.
class GroupElement {
 public:
  GroupElement(GroupSpec spec, CMat mat, double tol = kMembershipTol);

  static GroupElement identity(const GroupSpec& spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  const CMat& mat() const noexcept { return mat_; }

 private:
  GroupSpec spec_;
  CMat mat_;
};

enum class Part { k_part, p_part, mixed };

/// A Lie algebra element tagged with its position relative to the Cartan
/// decomposition g = k + p.
class LieVector {
 public:
  LieVector(GroupSpec spec, CMat mat, Part part, double tol = kMembershipTol);

  const GroupSpec& spec() const noexcept { return spec_; }
  const CMat& mat() const noexcept { return mat_; }
  Part part() const noexcept { return part_; }

 private:
  GroupSpec spec_;
  CMat mat_;
  Part part_;
};

/// Theta(g) = (g*)^-1, which is (g^-1)^T on real families.
GroupElement cartan_involution(const GroupElement& g);

/// A = k + p with theta(k) = k and theta(p) = -p.
std::pair<LieVector, LieVector> lie_split(const GroupSpec& spec, const CMat& A);

/// Hermitian eigendecomposition S = V diag(values) V*.
struct HermitianEigen {
  Eigen::VectorXd values;
  CMat vectors;

  /// V diag(f(values)) V*.
  template <typename F>
  CMat apply(F&& f) const {
    Eigen::VectorXd fv = values.unaryExpr(std::forward<F>(f));
    return vectors * fv.asDiagonal() * vectors.adjoint();
  }
};

/// Symmetrizes S when |S - S*|_F <= kHermitianTol * max(1, |S|_F) and throws
/// NumericalError above that.
HermitianEigen hermitian_eigen(const CMat& S);

CMat hermitian_exp(const CMat& H);
CMat hermitian_log(const CMat& S);

/// S^a = exp(a log S) for Hermitian positive-definite S.
CMat spd_power(const CMat& S, double a);

/// Matrix exponential of a Lie algebra element, canonicalized for spec.
CMat algebra_exp(const GroupSpec& spec, const CMat& A);

/// g = k exp(X) with k in K and X in p.
struct PolarFactors {
  GroupElement k;
  LieVector x;
};

PolarFactors polar_decompose(const GroupElement& g);

/// exp(A) for a pseudo-random algebra element A with entries of size ~scale.
/// Deterministic in (spec, seed, scale).
GroupElement sample_element(const GroupSpec& spec, std::uint64_t seed, double scale);

/// A pseudo-random element of the maximal compact subgroup.
GroupElement sample_compact_element(const GroupSpec& spec, std::uint64_t seed);

enum class ComponentHint { identity_component, other_component, undetermined };

/// Advisory guess at identity-component membership. Never used as a gate.
/// For SO_pq uses the signs of the two diagonal block determinants; for
/// GL_R, O and O_C the sign of det; connected families report
/// identity_component.
ComponentHint identity_component_hint(const GroupSpec& spec, const CMat& M);

}  // namespace charvar
