#pragma once

// Prime-divisor windows and maximal-power bounds for intersection Alexander
// polynomials, with violation certificates.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ialex/engine.hpp"
#include "ialex/laurent.hpp"

namespace ialex {

using PrimeSet = std::set<PrimitiveRep>;

struct LinkComponent {
  PolyList xi;                   // intersection Alexander polynomials of the link
  std::optional<PolyList> zeta;  // ordinary Alexander polynomials of the link
};

struct Stratum {
  long dim = 0;
  std::vector<LinkComponent> components;
};

struct StratificationData {
  long n = 0;
  std::vector<Stratum> strata;
};

// (stratum dimension i, p, q) -> e_ipq
using E2Table = std::map<std::tuple<long, long, long>, PrimitiveRep>;

// Prime factors of a polynomial, sorted.
PrimeSet prime_support(const PrimitiveRep& p, std::size_t degree_cap = kDefaultDegreeCap);

// Single manifold stratum of dimension n - k - 1. Throws DegreeOutOfRange
// unless 0 < i < n - 1.
PrimeSet allowed_primes_single(long i, long n, long k, const PrimitiveRep& c_i, const PolyList& xi,
                               std::size_t degree_cap = kDefaultDegreeCap);

// True when the hypotheses certify that gamma does not divide the
// intersection Alexander polynomial in degree i. Throws NotPrime.
bool exclusion_single(const PrimitiveRep& gamma, long i, long k, const Perversity& p, const PrimitiveRep& lambda_i,
                      const PolyList& xi, std::size_t degree_cap = kDefaultDegreeCap);

// Throws MissingOrdinaryData.
PrimeSet allowed_primes_general(long j, const PrimitiveRep& lambda_j, const StratificationData& data,
                                bool use_ordinary, std::size_t degree_cap = kDefaultDegreeCap);

// Throws NotPrime; PerversityOutOfRange if a needed codimension is missing.
unsigned long max_power_bound(const PrimitiveRep& gamma, long j, unsigned long gamma_j, const E2Table& table, long n,
                              const Perversity& p, std::size_t degree_cap = kDefaultDegreeCap);

struct Certificate {
  bool pass = true;
  std::optional<PrimitiveRep> prime;
  std::string reason;  // "outside-allowed" or "power-exceeded"
  unsigned long observed = 0;
  unsigned long allowed = 0;
};

Certificate check_result(const PrimitiveRep& ia_j, const PrimeSet& allowed,
                         const std::map<PrimitiveRep, unsigned long>& power_bounds,
                         std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace ialex
