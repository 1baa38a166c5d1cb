#include "ialex/bounds.hpp"

#include "ialex/error.hpp"

namespace ialex {

namespace {

bool is_t_minus_one(const PrimitiveRep& p) {
  return p.degree() == 1 && p.coeffs()[0] == -1 && p.coeffs()[1] == 1;
}

// Link-derived contributions never include t - 1.
void add_link_primes(PrimeSet& out, const PrimitiveRep& poly, std::size_t cap) {
  for (const auto& f : factor(poly, cap))
    if (!is_t_minus_one(f.prime)) out.insert(f.prime);
}

}  // namespace

PrimeSet prime_support(const PrimitiveRep& p, std::size_t degree_cap) {
  PrimeSet out;
  for (const auto& f : factor(p, degree_cap)) out.insert(f.prime);
  return out;
}

PrimeSet allowed_primes_single(long i, long n, long k, const PrimitiveRep& c_i, const PolyList& xi,
                               std::size_t degree_cap) {
  if (i <= 0 || i >= n - 1)
    throw Error(ErrorCode::DegreeOutOfRange,
                "the window applies to 0 < i < n - 1, got i=" + std::to_string(i) + " n=" + std::to_string(n));
  PrimeSet out = prime_support(c_i, degree_cap);
  for (long s = 1; s < k - 1; ++s) {
    long d = i - s;
    if (d < 0 || d > n - k) continue;
    add_link_primes(out, graded_at(xi, s), degree_cap);
  }
  return out;
}

bool exclusion_single(const PrimitiveRep& gamma, long /*i*/, long k, const Perversity& p,
                      const PrimitiveRep& lambda_i, const PolyList& xi, std::size_t degree_cap) {
  require_prime(gamma, degree_cap);
  if (divides(gamma, lambda_i)) return false;
  const long threshold = k - p.at(k + 1);
  for (long s = 0; s < static_cast<long>(xi.size()); ++s)
    if (s >= threshold && divides(gamma, xi[static_cast<std::size_t>(s)])) return false;
  return true;
}

PrimeSet allowed_primes_general(long j, const PrimitiveRep& lambda_j, const StratificationData& data,
                                bool use_ordinary, std::size_t degree_cap) {
  PrimeSet out = prime_support(lambda_j, degree_cap);
  for (std::size_t si = 0; si < data.strata.size(); ++si) {
    const Stratum& st = data.strata[si];
    const long i = st.dim;
    for (std::size_t ki = 0; ki < st.components.size(); ++ki) {
      const LinkComponent& comp = st.components[ki];
      for (long s = 0; s < data.n - i - 2; ++s) {
        long d = j - s;
        if (d < 0 || d > i - 1) continue;
        if (use_ordinary && !comp.zeta)
          throw Error(ErrorCode::MissingOrdinaryData, "stratum " + std::to_string(si) + " component " +
                                                          std::to_string(ki) + " has no ordinary link polynomials");
        add_link_primes(out, graded_at(use_ordinary ? *comp.zeta : comp.xi, s), degree_cap);
      }
    }
  }
  return out;
}

unsigned long max_power_bound(const PrimitiveRep& gamma, long j, unsigned long gamma_j, const E2Table& table, long n,
                              const Perversity& p, std::size_t degree_cap) {
  require_prime(gamma, degree_cap);
  unsigned long bound = gamma_j;
  for (const auto& [key, e] : table) {
    const auto [i, pp, q] = key;
    if (i < 0 || i > n - 2) continue;
    if (pp + q == j) {
      unsigned long m = multiplicity(gamma, e);
      if (m == 0) continue;
      if (q == 0 || q < n - i - 1 - p.at(n - i)) bound += m;
    } else if (pp + q == j - 1) {
      bound += multiplicity(gamma, e);
    }
  }
  return bound;
}

Certificate check_result(const PrimitiveRep& ia_j, const PrimeSet& allowed,
                         const std::map<PrimitiveRep, unsigned long>& power_bounds, std::size_t degree_cap) {
  Certificate cert;
  for (const auto& f : factor(ia_j, degree_cap)) {
    if (!allowed.contains(f.prime)) {
      cert.pass = false;
      cert.prime = f.prime;
      cert.reason = "outside-allowed";
      cert.observed = f.multiplicity;
      cert.allowed = 0;
      return cert;
    }
    auto it = power_bounds.find(f.prime);
    if (it != power_bounds.end() && f.multiplicity > it->second) {
      cert.pass = false;
      cert.prime = f.prime;
      cert.reason = "power-exceeded";
      cert.observed = f.multiplicity;
      cert.allowed = it->second;
      return cert;
    }
  }
  return cert;
}

}  // namespace ialex
