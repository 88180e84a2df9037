#include "charvar/rational_poly.hpp"

#include <sstream>

namespace charvar {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(int constant) : PolyQ(Rational(constant)) {}

PolyQ::PolyQ(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

PolyQ PolyQ::monomial(Rational c, int degree) {
  if (degree < 0) throw ValidationError("monomial degree must be >= 0");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return PolyQ(std::move(coeffs));
}

PolyQ PolyQ::t() { return monomial(Rational(1), 1); }

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (coeffs_.empty()) throw ValidationError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyQ PolyQ::pow(int exponent) const {
  if (exponent < 0) throw ValidationError("negative polynomial power");
  PolyQ result(1);
  PolyQ base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational PolyQ::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw ValidationError("polynomial division by zero");
  if (degree() < divisor.degree()) return {PolyQ(), *this};

  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rational& lead = divisor.leading();
  const std::size_t dsize = divisor.coeffs_.size();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dsize - 1] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < dsize; ++j) rem[k + j] -= factor * divisor.coeffs_[j];
  }
  rem.resize(dsize - 1);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  PolyQ out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

std::string PolyQ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::pair<PolyQ, PolyQ> reduce(PolyQ num, PolyQ den) {
  if (den.is_zero()) throw ValidationError("rational function with zero denominator");
  if (num.is_zero()) return {PolyQ(), PolyQ(1)};
  const PolyQ g = gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  const PolyQ inv_lead(Rational(1) / den.leading());
  return {num * inv_lead, den * inv_lead};
}

}  // namespace

RatQ::RatQ(PolyQ num, PolyQ den) {
  auto [n, d] = reduce(std::move(num), std::move(den));
  num_ = std::move(n);
  den_ = std::move(d);
}

RatQ operator+(const RatQ& a, const RatQ& b) {
  return RatQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatQ operator-(const RatQ& a, const RatQ& b) {
  return RatQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatQ operator*(const RatQ& a, const RatQ& b) { return RatQ(a.num_ * b.num_, a.den_ * b.den_); }

RatQ operator/(const RatQ& a, const RatQ& b) {
  if (b.num_.is_zero()) throw ValidationError("division by the zero rational function");
  return RatQ(a.num_ * b.den_, a.den_ * b.num_);
}

PolyQ to_polynomial(const RatQ& x) {
  auto [quot, rem] = x.num().divmod(x.den());
  if (!rem.is_zero()) {
    throw NotPolynomial("rational function (" + x.num().to_string() + ")/(" + x.den().to_string() +
                            ") is not a polynomial; remainder " + rem.to_string(),
                        rem);
  }
  return quot;
}

}  // namespace charvar
