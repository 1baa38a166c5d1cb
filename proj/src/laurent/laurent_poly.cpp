#include <stdexcept>

#include "ialex/error.hpp"
#include "ialex/laurent.hpp"
#include "zpoly.hpp"

namespace ialex {

LaurentPoly::LaurentPoly(long value) : low_(0) {
  if (value != 0) coeffs_.emplace_back(value);
}

LaurentPoly::LaurentPoly(const Rational& value) : low_(0) {
  if (value != 0) coeffs_.push_back(value);
}

LaurentPoly::LaurentPoly(long low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, long exponent) {
  return LaurentPoly(exponent, {coeff});
}

void LaurentPoly::trim() {
  detail::trim(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coefficient(long exponent) const {
  if (exponent < low_ || exponent > high_exponent()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (x == 0 && low_ < 0) throw std::domain_error("evaluating a negative power at 0");
  Rational acc = 0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
  if (low_ > 0) {
    for (long k = 0; k < low_; ++k) acc *= x;
  } else {
    for (long k = 0; k < -low_; ++k) acc /= x;
  }
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  long lo = std::min(low_, other.low_);
  long hi = std::max(high_exponent(), other.high_exponent());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out[static_cast<std::size_t>(low_ - lo) + j] += coeffs_[j];
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
    out[static_cast<std::size_t>(other.low_ - lo) + j] += other.coeffs_[j];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.low_ + b.low_, detail::mul(a.coeffs_, b.coeffs_));
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit of Gamma");
  return monomial(1 / coeffs_[0], -low_);
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

LaurentPoly involute(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> rev(p.dense().rbegin(), p.dense().rend());
  return LaurentPoly(-p.high_exponent(), std::move(rev));
}

DivMod euclidean_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero in Gamma");
  if (a.is_zero()) return {};
  detail::QPoly q, r;
  detail::divmod(a.dense(), b.dense(), q, r);
  return {LaurentPoly(a.low_exponent() - b.low_exponent(), std::move(q)), LaurentPoly(a.low_exponent(), std::move(r))};
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  DivMod qr = euclidean_divide(a, b);
  if (!qr.remainder.is_zero()) return std::nullopt;
  return qr.quotient;
}

Bezout extended_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  // Run the extended Euclidean algorithm on the Q[t] parts, then put the
  // monomial shifts back into the cofactors.
  detail::QPoly r0 = a.dense(), r1 = b.dense();
  detail::QPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    detail::QPoly q, r;
    detail::divmod(r0, r1, q, r);
    detail::QPoly s2 = detail::sub(s0, detail::mul(q, s1));
    detail::QPoly t2 = detail::sub(t0, detail::mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = s0*A + t0*B with A = t^-la a, B = t^-lb b. Rescale r0 to its
  // primitive representative.
  detail::ZPoly prim = detail::to_primitive_z(r0);
  mpq_class scale = mpq_class(prim.back()) / r0.back();
  for (auto& c : s0) c *= scale;
  for (auto& c : t0) c *= scale;
  Bezout out;
  out.gcd = LaurentPoly(0, detail::to_q(prim));
  out.s = LaurentPoly(-a.low_exponent(), std::move(s0));
  out.t = LaurentPoly(-b.low_exponent(), std::move(t0));
  return out;
}

}  // namespace ialex
