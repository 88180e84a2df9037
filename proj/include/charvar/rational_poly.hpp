#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charvar/types.hpp"

namespace charvar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in t with exact rational coefficients; coeffs[i] is
/// the coefficient of t^i. Canonical form has a nonzero leading coefficient
/// (the zero polynomial has no coefficients).
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(int constant);  // NOLINT(google-explicit-constructor)
  explicit PolyQ(Rational constant);

  /// c * t^degree.
  static PolyQ monomial(Rational c, int degree);
  /// The variable t.
  static PolyQ t();

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of t^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  PolyQ& operator+=(const PolyQ& rhs);
  PolyQ& operator-=(const PolyQ& rhs);
  PolyQ& operator*=(const PolyQ& rhs);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  PolyQ operator-() const;

  bool operator==(const PolyQ&) const = default;

  PolyQ pow(int exponent) const;
  Rational evaluate(const Rational& x) const;

  /// Quotient and remainder; throws ValidationError when divisor is zero.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  PolyQ monic() const;

  /// "1 + 4*t^6 + t^9" style; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
PolyQ gcd(PolyQ a, PolyQ b);

/// num/den kept in lowest terms with a monic denominator.
class RatQ {
 public:
  RatQ(PolyQ num = PolyQ(), PolyQ den = PolyQ(1));  // NOLINT(google-explicit-constructor)

  const PolyQ& num() const noexcept { return num_; }
  const PolyQ& den() const noexcept { return den_; }
  bool is_polynomial() const { return den_ == PolyQ(1); }

  friend RatQ operator+(const RatQ& a, const RatQ& b);
  friend RatQ operator-(const RatQ& a, const RatQ& b);
  friend RatQ operator*(const RatQ& a, const RatQ& b);
  /// Throws ValidationError on division by zero.
  friend RatQ operator/(const RatQ& a, const RatQ& b);

  bool operator==(const RatQ&) const = default;

 private:
  PolyQ num_;
  PolyQ den_;
};

/// Raised when a rational function does not reduce to a polynomial.
class NotPolynomial : public Error {
 public:
  NotPolynomial(const std::string& what, PolyQ remainder)
      : Error("not_polynomial", what), remainder_(std::move(remainder)) {}
  const PolyQ& remainder() const noexcept { return remainder_; }

 private:
  PolyQ remainder_;
};

/// The quotient num/den when den divides num exactly; NotPolynomial otherwise.
PolyQ to_polynomial(const RatQ& x);

}  // namespace charvar
