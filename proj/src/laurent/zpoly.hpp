#pragma once

// Dense integer and rational polynomial helpers shared by the laurent sources.
// Index j holds the coefficient of t^j. Vectors are kept trimmed: no trailing
// zeros, and the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace ialex::detail {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& f);
void trim(QPoly& f);

mpz_class content(const ZPoly& f);
// Content removed, positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);

// Quotient when b divides a over Z (b nonzero).
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

QPoly to_q(const ZPoly& f);
// Clear denominators and return the primitive part.
ZPoly to_primitive_z(const QPoly& f);

QPoly mul(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& f);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);

// Square-free decomposition of a primitive polynomial: result[i] is the
// product of the primes of multiplicity i+1, each entry primitive.
std::vector<ZPoly> squarefree_decomposition(const ZPoly& f);

}  // namespace ialex::detail
