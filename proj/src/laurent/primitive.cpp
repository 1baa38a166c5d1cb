#include <stdexcept>

#include "ialex/error.hpp"
#include "ialex/laurent.hpp"
#include "zpoly.hpp"

namespace ialex {

namespace {

// Drop the t^k factor of an integer polynomial.
detail::ZPoly strip_low(detail::ZPoly f) {
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == 0) ++lead;
  f.erase(f.begin(), f.begin() + static_cast<long>(lead));
  return f;
}

}  // namespace

PrimitiveRep PrimitiveRep::from_canonical(std::vector<Integer> coeffs) {
  if (coeffs.empty() || coeffs.front() == 0 || coeffs.back() <= 0 || detail::content(coeffs) != 1)
    throw std::invalid_argument("coefficients are not a primitive representative");
  return PrimitiveRep(std::move(coeffs));
}

LaurentPoly PrimitiveRep::to_laurent() const { return LaurentPoly(0, detail::to_q(coeffs_)); }

Integer PrimitiveRep::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::strong_ordering operator<=>(const PrimitiveRep& a, const PrimitiveRep& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t j = a.coeffs_.size(); j-- > 0;) {
    int c = cmp(a.coeffs_[j], b.coeffs_[j]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

PrimitiveRep normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  return PrimitiveRep::from_canonical(detail::to_primitive_z(p.dense()));
}

bool similar(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize(p) == normalize(q);
}

PrimitiveRep gcd(const PrimitiveRep& p, const PrimitiveRep& q) {
  if (p.is_one() || q.is_one()) return PrimitiveRep::one();
  if (p == q) return p;
  return PrimitiveRep::from_canonical(strip_low(detail::gcd(p.coeffs(), q.coeffs())));
}

PrimitiveRep gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  return gcd(normalize(p), normalize(q));
}

PrimitiveRep lcm(const PrimitiveRep& p, const PrimitiveRep& q) {
  return *divide(p * q, gcd(p, q));
}

PrimitiveRep operator*(const PrimitiveRep& a, const PrimitiveRep& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  // Gauss: a product of primitive polynomials is primitive.
  return PrimitiveRep::from_canonical(detail::mul(a.coeffs(), b.coeffs()));
}

PrimitiveRep pow(const PrimitiveRep& base, unsigned exponent) {
  PrimitiveRep result;
  PrimitiveRep b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

PrimitiveRep product(const std::vector<PrimitiveRep>& factors) {
  PrimitiveRep result;
  for (const auto& f : factors) result = result * f;
  return result;
}

std::optional<PrimitiveRep> divide(const PrimitiveRep& a, const PrimitiveRep& b) {
  if (b.is_one()) return a;
  if (b.degree() > a.degree()) return std::nullopt;
  auto q = detail::divide_exact(a.coeffs(), b.coeffs());
  if (!q) return std::nullopt;
  return PrimitiveRep::from_canonical(std::move(*q));
}

bool divides(const PrimitiveRep& divisor, const PrimitiveRep& a) { return divide(a, divisor).has_value(); }

unsigned multiplicity(const PrimitiveRep& prime, const PrimitiveRep& a) {
  if (prime.is_one()) throw std::invalid_argument("multiplicity of a unit is undefined");
  unsigned m = 0;
  PrimitiveRep cur = a;
  while (auto q = divide(cur, prime)) {
    cur = std::move(*q);
    ++m;
  }
  return m;
}

PrimitiveRep involute(const PrimitiveRep& p) { return normalize(involute(p.to_laurent())); }

PrimitiveRep expand(const Factorization& factors) {
  PrimitiveRep result;
  for (const auto& f : factors) result = result * pow(f.prime, f.multiplicity);
  return result;
}

bool is_alexander_type(const PrimitiveRep& p) {
  Integer v = p.evaluate_at_one();
  return v == 1 || v == -1;
}

bool is_alexander_type(const LaurentPoly& p) { return is_alexander_type(normalize(p)); }

bool is_irreducible(const PrimitiveRep& p, std::size_t degree_cap) {
  Factorization f = factor(p, degree_cap);
  return f.size() == 1 && f[0].multiplicity == 1;
}

void require_prime(const PrimitiveRep& p, std::size_t degree_cap) {
  if (!is_irreducible(p, degree_cap)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not irreducible");
}

}  // namespace ialex
