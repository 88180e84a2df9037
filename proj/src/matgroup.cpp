#include "charvar/matgroup.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace charvar {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 13> kFamilyNames{{
    {Family::GL_R, "GL_R"},
    {Family::SL_R, "SL_R"},
    {Family::SO, "SO"},
    {Family::O, "O"},
    {Family::SO_pq, "SO_pq"},
    {Family::U, "U"},
    {Family::SU, "SU"},
    {Family::U_pq, "U_pq"},
    {Family::Sp_R, "Sp_R"},
    {Family::GL_C, "GL_C"},
    {Family::SL_C, "SL_C"},
    {Family::SO_C, "SO_C"},
    {Family::O_C, "O_C"},
}};

void check_square(const GroupSpec& spec, const CMat& M, const char* what) {
  if (M.rows() != spec.n() || M.cols() != spec.n()) {
    std::ostringstream os;
    os << what << ": expected " << spec.n() << "x" << spec.n() << " matrix for "
       << spec.to_string() << ", got " << M.rows() << "x" << M.cols();
    throw ValidationError(os.str());
  }
}

CMat herm_part(const CMat& A) { return (A + A.adjoint()) / 2.0; }
CMat antiherm_part(const CMat& A) { return (A - A.adjoint()) / 2.0; }
CMat skew_part(const CMat& A) { return (A - A.transpose()) / 2.0; }
CMat sym_part(const CMat& A) { return (A + A.transpose()) / 2.0; }

CMat remove_trace(const CMat& A) {
  const auto n = A.rows();
  CMat out = A;
  const Complex shift = A.trace() / static_cast<double>(n);
  out.diagonal().array() -= shift;
  return out;
}

CMat real_part(const CMat& A) { return A.real().cast<Complex>(); }

double imag_norm(const CMat& M) { return M.imag().norm(); }

}  // namespace

std::string_view family_name(Family family) noexcept {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

bool GroupSpec::has_signature(Family family) noexcept {
  return family == Family::SO_pq || family == Family::U_pq;
}

GroupSpec GroupSpec::make(Family family, int n) {
  if (has_signature(family)) {
    throw ValidationError(std::string(family_name(family)) + " requires a signature (p,q)");
  }
  if (n < 1) throw ValidationError("matrix size must be >= 1");
  if (family == Family::Sp_R && n % 2 != 0) {
    throw ValidationError("Sp_R requires even matrix size");
  }
  return GroupSpec(family, n, std::nullopt);
}

GroupSpec GroupSpec::make(Family family, int p, int q) {
  if (!has_signature(family)) {
    throw ValidationError(std::string(family_name(family)) + " does not take a signature");
  }
  if (p < 1 || q < 1) throw ValidationError("signature entries must be >= 1");
  return GroupSpec(family, p + q, Signature{p, q});
}

GroupSpec GroupSpec::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw ValidationError("malformed group spec '" + std::string(text) +
                          "', expected FAMILY(n) or FAMILY(p,q)");
  }
  const std::string_view name = text.substr(0, open);
  const std::string_view args = text.substr(open + 1, text.size() - open - 2);

  std::optional<Family> family;
  for (const auto& [f, fname] : kFamilyNames) {
    if (fname == name) family = f;
  }
  if (!family) throw ValidationError("unknown group family '" + std::string(name) + "'");

  auto parse_int = [&](std::string_view s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) {
      throw ValidationError("malformed integer '" + std::string(s) + "' in group spec '" +
                            std::string(text) + "'");
    }
    return value;
  };

  const auto comma = args.find(',');
  if (has_signature(*family)) {
    if (comma == std::string_view::npos) {
      throw ValidationError(std::string(name) + " requires (p,q)");
    }
    return make(*family, parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
  }
  if (comma != std::string_view::npos) {
    throw ValidationError(std::string(name) + " takes a single size argument");
  }
  return make(*family, parse_int(args));
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  os << family_name(family_) << '(';
  if (signature_) {
    os << signature_->p << ',' << signature_->q;
  } else {
    os << n_;
  }
  os << ')';
  return os.str();
}

bool GroupSpec::is_real() const noexcept {
  switch (family_) {
    case Family::GL_R:
    case Family::SL_R:
    case Family::SO:
    case Family::O:
    case Family::SO_pq:
    case Family::Sp_R:
      return true;
    default:
      return false;
  }
}

bool GroupSpec::is_unimodular() const noexcept {
  switch (family_) {
    case Family::SL_R:
    case Family::SO:
    case Family::SO_pq:
    case Family::SU:
    case Family::SL_C:
    case Family::SO_C:
      return true;
    default:
      return false;
  }
}

bool GroupSpec::is_compact() const noexcept {
  switch (family_) {
    case Family::SO:
    case Family::O:
    case Family::U:
    case Family::SU:
      return true;
    default:
      return false;
  }
}

CMat GroupSpec::form() const {
  CMat F = CMat::Identity(n_, n_);
  if (signature_) {
    for (int i = signature_->p; i < n_; ++i) F(i, i) = -1.0;
  } else if (family_ == Family::Sp_R) {
    const int m = n_ / 2;
    F.setZero();
    F.topRightCorner(m, m) = CMat::Identity(m, m);
    F.bottomLeftCorner(m, m) = -CMat::Identity(m, m);
  }
  return F;
}

double group_membership(const GroupSpec& spec, const CMat& M) {
  check_square(spec, M, "group_membership");
  const auto n = spec.n();
  const CMat I = CMat::Identity(n, n);
  const Complex det = M.determinant();
  if (det == Complex(0.0, 0.0) || !std::isfinite(std::abs(det))) {
    return std::numeric_limits<double>::infinity();
  }

  double defect = 0.0;
  if (spec.is_real()) defect += imag_norm(M);
  if (spec.is_unimodular()) defect += std::abs(det - 1.0);

  switch (spec.family()) {
    case Family::SO:
    case Family::O:
      defect += (M.transpose() * M - I).norm();
      break;
    case Family::SO_pq:
    case Family::Sp_R: {
      const CMat F = spec.form();
      defect += (M.transpose() * F * M - F).norm();
      break;
    }
    case Family::U:
    case Family::SU:
      defect += (M.adjoint() * M - I).norm();
      break;
    case Family::U_pq: {
      const CMat F = spec.form();
      defect += (M.adjoint() * F * M - F).norm();
      break;
    }
    case Family::SO_C:
    case Family::O_C:
      defect += (M.transpose() * M - I).norm();
      break;
    case Family::GL_R:
    case Family::SL_R:
    case Family::GL_C:
    case Family::SL_C:
      break;
  }
  return defect;
}

double relative_membership(const GroupSpec& spec, const CMat& M) {
  return group_membership(spec, M) / (1.0 + M.squaredNorm());
}

double compact_membership(const GroupSpec& spec, const CMat& M) {
  const auto n = spec.n();
  return group_membership(spec, M) + (M.adjoint() * M - CMat::Identity(n, n)).norm();
}

CMat project_to_algebra(const GroupSpec& spec, const CMat& A) {
  check_square(spec, A, "project_to_algebra");
  switch (spec.family()) {
    case Family::GL_R:
      return real_part(A);
    case Family::SL_R:
      return remove_trace(real_part(A));
    case Family::SO:
    case Family::O:
      return skew_part(real_part(A));
    case Family::SO_pq: {
      const CMat F = spec.form();
      return F * skew_part(F * real_part(A));
    }
    case Family::U:
      return antiherm_part(A);
    case Family::SU:
      return remove_trace(antiherm_part(A));
    case Family::U_pq: {
      const CMat F = spec.form();
      return F * antiherm_part(F * A);
    }
    case Family::Sp_R: {
      const CMat J = spec.form();
      return -J * sym_part(J * real_part(A));
    }
    case Family::GL_C:
      return A;
    case Family::SL_C:
      return remove_trace(A);
    case Family::SO_C:
    case Family::O_C:
      return skew_part(A);
  }
  return A;
}

CMat project_to_k(const GroupSpec& spec, const CMat& A) {
  return project_to_algebra(spec, antiherm_part(A));
}

CMat project_to_p(const GroupSpec& spec, const CMat& A) {
  return project_to_algebra(spec, herm_part(A));
}

double algebra_membership(const GroupSpec& spec, const CMat& A) {
  return (A - project_to_algebra(spec, A)).norm();
}

CMat canonicalize(const GroupSpec& spec, CMat M) {
  if (spec.is_real()) M = real_part(M);
  return M;
}

GroupElement::GroupElement(GroupSpec spec, CMat mat, double tol)
    : spec_(std::move(spec)), mat_(std::move(mat)) {
  check_square(spec_, mat_, "GroupElement");
  const double residual = relative_membership(spec_, mat_);
  if (!(residual <= tol)) {
    std::ostringstream os;
    os << "matrix is not in " << spec_.to_string() << " (relative residual " << residual
       << ", tolerance " << tol << ")";
    throw MembershipError(os.str(), residual);
  }
}

GroupElement GroupElement::identity(const GroupSpec& spec) {
  return GroupElement(spec, CMat::Identity(spec.n(), spec.n()));
}

LieVector::LieVector(GroupSpec spec, CMat mat, Part part, double tol)
    : spec_(std::move(spec)), mat_(std::move(mat)), part_(part) {
  check_square(spec_, mat_, "LieVector");
  const double scale = 1.0 + mat_.norm();
  const double off_algebra = algebra_membership(spec_, mat_);
  if (!(off_algebra <= tol * scale)) {
    throw MembershipError("matrix is not in the Lie algebra of " + spec_.to_string(),
                          off_algebra);
  }
  if (part_ == Part::k_part) {
    const double d = (mat_ + mat_.adjoint()).norm();
    if (!(d <= tol * scale)) throw MembershipError("k-part must be anti-Hermitian", d);
  } else if (part_ == Part::p_part) {
    const double d = (mat_ - mat_.adjoint()).norm();
    if (!(d <= tol * scale)) throw MembershipError("p-part must be Hermitian", d);
  }
}

GroupElement cartan_involution(const GroupElement& g) {
  const CMat adj = g.mat().adjoint();
  Eigen::PartialPivLU<CMat> lu(adj);
  if (lu.determinant() == Complex(0.0, 0.0)) {
    throw NumericalError("cartan_involution: singular matrix");
  }
  return GroupElement(g.spec(), canonicalize(g.spec(), lu.inverse()));
}

std::pair<LieVector, LieVector> lie_split(const GroupSpec& spec, const CMat& A) {
  check_square(spec, A, "lie_split");
  const double off = algebra_membership(spec, A);
  if (!(off <= kMembershipTol * (1.0 + A.norm()))) {
    throw MembershipError("lie_split: matrix is not in the Lie algebra of " + spec.to_string(),
                          off);
  }
  CMat p = herm_part(A);
  CMat k = A - p;
  return {LieVector(spec, std::move(k), Part::k_part), LieVector(spec, std::move(p), Part::p_part)};
}

HermitianEigen hermitian_eigen(const CMat& S) {
  if (S.rows() != S.cols()) throw ValidationError("hermitian_eigen: matrix must be square");
  const double asym = (S - S.adjoint()).norm();
  if (!(asym <= kHermitianTol * std::max(1.0, S.norm()))) {
    std::ostringstream os;
    os << "matrix is not Hermitian (|S - S*|_F = " << asym << ")";
    throw NumericalError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver(herm_part(S));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition failed");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

CMat hermitian_exp(const CMat& H) {
  return hermitian_eigen(H).apply([](double x) { return std::exp(x); });
}

namespace {

HermitianEigen positive_eigen(const CMat& S) {
  HermitianEigen eig = hermitian_eigen(S);
  if (eig.values.size() > 0 && !(eig.values.minCoeff() > 0.0)) {
    std::ostringstream os;
    os << "matrix is not positive definite (min eigenvalue " << eig.values.minCoeff() << ")";
    throw NumericalError(os.str());
  }
  return eig;
}

}  // namespace

CMat hermitian_log(const CMat& S) {
  return positive_eigen(S).apply([](double x) { return std::log(x); });
}

CMat spd_power(const CMat& S, double a) {
  return positive_eigen(S).apply([a](double x) { return std::exp(a * std::log(x)); });
}

CMat algebra_exp(const GroupSpec& spec, const CMat& A) {
  check_square(spec, A, "algebra_exp");
  CMat E = A.exp();
  return canonicalize(spec, std::move(E));
}

PolarFactors polar_decompose(const GroupElement& g) {
  const GroupSpec& spec = g.spec();
  const HermitianEigen eig = positive_eigen(g.mat().adjoint() * g.mat());

  // X = log(g*g)/2 lies in p; k = g exp(-X).
  CMat X = canonicalize(spec, eig.apply([](double x) { return 0.5 * std::log(x); }));
  X = herm_part(X);
  const CMat exp_minus_x =
      canonicalize(spec, eig.apply([](double x) { return 1.0 / std::sqrt(x); }));
  CMat k = canonicalize(spec, g.mat() * exp_minus_x);

  const double defect = compact_membership(spec, k) / (1.0 + k.squaredNorm());
  if (!(defect <= kMembershipTol)) {
    throw MembershipError("polar_decompose: compact factor left " + spec.to_string(), defect);
  }
  return PolarFactors{GroupElement(spec, std::move(k)), LieVector(spec, std::move(X), Part::p_part)};
}

GroupElement sample_element(const GroupSpec& spec, std::uint64_t seed, double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw ValidationError("sample_element: scale must be a finite nonnegative number");
  }
  const auto n = spec.n();
  if (scale == 0.0) return GroupElement::identity(spec);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat A(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      A(i, j) = Complex(re, im) * scale;
    }
  }
  return GroupElement(spec, algebra_exp(spec, project_to_algebra(spec, A)));
}

GroupElement sample_compact_element(const GroupSpec& spec, std::uint64_t seed) {
  const auto n = spec.n();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat A(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      A(i, j) = Complex(re, im);
    }
  }
  // exp of a k-element stays in K; a full-size angle keeps samples spread out.
  return GroupElement(spec, algebra_exp(spec, project_to_k(spec, A)));
}

ComponentHint identity_component_hint(const GroupSpec& spec, const CMat& M) {
  check_square(spec, M, "identity_component_hint");
  auto sign_of = [](double x) {
    return x > 0.0 ? ComponentHint::identity_component
                   : (x < 0.0 ? ComponentHint::other_component : ComponentHint::undetermined);
  };
  switch (spec.family()) {
    case Family::GL_R:
    case Family::O:
      return sign_of(M.real().determinant());
    case Family::O_C: {
      const Complex d = M.determinant();
      return sign_of(d.real());
    }
    case Family::SO_pq: {
      const int p = spec.signature()->p;
      const int q = spec.signature()->q;
      const double a = M.real().topLeftCorner(p, p).determinant();
      const double b = M.real().bottomRightCorner(q, q).determinant();
      if (a > 0.0 && b > 0.0) return ComponentHint::identity_component;
      if (a < 0.0 || b < 0.0) return ComponentHint::other_component;
      return ComponentHint::undetermined;
    }
    default:
      return ComponentHint::identity_component;
  }
}

}  // namespace charvar
