#pragma once

// Exact arithmetic in the Laurent ring Gamma = Q[t, t^-1].
//
// Elements are LaurentPoly values with arbitrary precision rational
// coefficients. Similarity classes (equality up to the units q*t^k) are
// represented by PrimitiveRep: an integer polynomial with nonzero constant
// term, content 1 and positive leading coefficient.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ialex {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kDefaultDegreeCap = 64;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& value);  // NOLINT
  // coeffs[j] is the coefficient of t^(low + j); zeros are trimmed.
  LaurentPoly(long low, std::vector<Rational> coeffs);

  static LaurentPoly monomial(const Rational& coeff, long exponent);
  static LaurentPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // A nonzero single term q*t^k.
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }

  long low_exponent() const { return low_; }
  long high_exponent() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  // Width of the exponent range; the Euclidean norm of Gamma. Zero for units.
  std::size_t span() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  const std::vector<Rational>& dense() const { return coeffs_; }
  Rational coefficient(long exponent) const;
  const Rational& leading_coefficient() const { return coeffs_.back(); }
  const Rational& trailing_coefficient() const { return coeffs_.front(); }

  Rational evaluate(const Rational& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // Multiplicative inverse of a unit. Throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;

 private:
  void trim();

  long low_ = 0;
  std::vector<Rational> coeffs_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

// p(t) -> p(t^-1)
LaurentPoly involute(const LaurentPoly& p);

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

// Euclidean division in Gamma: a = q*b + r with r = 0 or span(r) < span(b).
DivMod euclidean_divide(const LaurentPoly& a, const LaurentPoly& b);

// Quotient a/b when b divides a in Gamma.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

struct Bezout {
  LaurentPoly gcd;  // primitive representative as an element of Gamma
  LaurentPoly s;
  LaurentPoly t;    // s*a + t*b = gcd
};

Bezout extended_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Canonical representative of a similarity class.
class PrimitiveRep {
 public:
  // The class of units.
  PrimitiveRep() : coeffs_{Integer(1)} {}
  static PrimitiveRep one() { return PrimitiveRep(); }

  // Coefficients in increasing degree; must already satisfy the invariants.
  static PrimitiveRep from_canonical(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_one() const { return coeffs_.size() == 1; }

  LaurentPoly to_laurent() const;
  Integer evaluate_at_one() const;

  friend bool operator==(const PrimitiveRep& a, const PrimitiveRep& b) {
    return a.coeffs_ == b.coeffs_;
  }
  // Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const PrimitiveRep& a, const PrimitiveRep& b);

 private:
  explicit PrimitiveRep(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Integer> coeffs_;
};

PrimitiveRep normalize(const LaurentPoly& p);
bool similar(const LaurentPoly& p, const LaurentPoly& q);

PrimitiveRep gcd(const LaurentPoly& p, const LaurentPoly& q);
PrimitiveRep gcd(const PrimitiveRep& p, const PrimitiveRep& q);
PrimitiveRep lcm(const PrimitiveRep& p, const PrimitiveRep& q);

PrimitiveRep operator*(const PrimitiveRep& a, const PrimitiveRep& b);
PrimitiveRep pow(const PrimitiveRep& base, unsigned exponent);
PrimitiveRep product(const std::vector<PrimitiveRep>& factors);

// a / b when b divides a up to units.
std::optional<PrimitiveRep> divide(const PrimitiveRep& a, const PrimitiveRep& b);
bool divides(const PrimitiveRep& divisor, const PrimitiveRep& a);
// Largest m with prime^m | a. prime must be a nonunit.
unsigned multiplicity(const PrimitiveRep& prime, const PrimitiveRep& a);

PrimitiveRep involute(const PrimitiveRep& p);

struct PrimePower {
  PrimitiveRep prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime; units factor as the empty list.
using Factorization = std::vector<PrimePower>;

Factorization factor(const LaurentPoly& p, std::size_t degree_cap = kDefaultDegreeCap);
Factorization factor(const PrimitiveRep& p, std::size_t degree_cap = kDefaultDegreeCap);
PrimitiveRep expand(const Factorization& factors);

bool is_irreducible(const PrimitiveRep& p, std::size_t degree_cap = kDefaultDegreeCap);
// Throws NotPrime unless p is irreducible.
void require_prime(const PrimitiveRep& p, std::size_t degree_cap = kDefaultDegreeCap);

bool is_alexander_type(const LaurentPoly& p);
bool is_alexander_type(const PrimitiveRep& p);

// Text grammar: terms c*t^e, c, t^e, t joined by + and -.
LaurentPoly parse_laurent(std::string_view text);
PrimitiveRep parse_primitive(std::string_view text);

std::string to_string(const LaurentPoly& p);
std::string to_string(const PrimitiveRep& p);

}  // namespace ialex
