// Factorization over Q: square-free split, Cantor-Zassenhaus modulo a small
// prime, multifactor Hensel lifting and Zassenhaus recombination.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "ialex/error.hpp"
#include "ialex/laurent.hpp"
#include "zpoly.hpp"

namespace ialex {

namespace {

using detail::ZPoly;
using u64 = std::uint64_t;
using UPoly = std::vector<u64>;

void utrim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long udeg(const UPoly& f) { return static_cast<long>(f.size()) - 1; }

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

UPoly reduce(const ZPoly& f, u64 p) {
  UPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  utrim(out);
  return out;
}

ZPoly lift(const UPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<unsigned long>(f[i]);
  return out;
}

UPoly uadd(const UPoly& a, const UPoly& b, u64 p) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  utrim(out);
  return out;
}

UPoly usub(const UPoly& a, const UPoly& b, u64 p) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  utrim(out);
  return out;
}

UPoly umul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  utrim(out);
  return out;
}

void udivmod(const UPoly& a, const UPoly& b, u64 p, UPoly& q, UPoly& r) {
  r = a;
  utrim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 top = r[k + b.size() - 1];
    if (top == 0) continue;
    u64 c = mulmod(top, inv, p);
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = (r[k + j] + p - mulmod(c, b[j], p)) % p;
    q[k] = c;
  }
  utrim(q);
  utrim(r);
}

UPoly umod(const UPoly& a, const UPoly& b, u64 p) {
  UPoly q, r;
  udivmod(a, b, p, q, r);
  return r;
}

UPoly udiv(const UPoly& a, const UPoly& b, u64 p) {
  UPoly q, r;
  udivmod(a, b, p, q, r);
  return q;
}

UPoly make_monic(UPoly f, u64 p) {
  if (f.empty()) return f;
  u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

UPoly ugcd(UPoly a, UPoly b, u64 p) {
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void uxgcd(const UPoly& a, const UPoly& b, u64 p, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    UPoly q, r;
    udivmod(r0, r1, p, q, r);
    UPoly s2 = usub(s0, umul(q, s1, p), p);
    UPoly t2 = usub(t0, umul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("Hensel factors are not coprime mod p");
  u64 inv = invmod(r0[0], p);
  s = umul(s0, UPoly{inv}, p);
  t = umul(t0, UPoly{inv}, p);
}

UPoly upowmod(UPoly base, const mpz_class& e, const UPoly& mod, u64 p) {
  UPoly result{1};
  base = umod(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = umod(umul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = umod(umul(result, base, p), mod, p);
  }
  return result;
}

UPoly uderivative(const UPoly& f, u64 p) {
  if (f.size() <= 1) return {};
  UPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % p, p);
  utrim(out);
  return out;
}

// Distinct-degree factorization of a monic square-free f.
std::vector<std::pair<UPoly, long>> ddf(UPoly f, u64 p) {
  std::vector<std::pair<UPoly, long>> out;
  const UPoly x{0, 1};
  UPoly h = umod(x, f, p);
  for (long d = 1; 2 * d <= udeg(f); ++d) {
    h = upowmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    UPoly g = ugcd(f, usub(h, x, p), p);
    if (udeg(g) > 0) {
      out.emplace_back(g, d);
      f = udiv(f, g, p);
      h = umod(h, f, p);
    }
  }
  if (udeg(f) > 0) out.emplace_back(f, udeg(f));
  return out;
}

void edf(const UPoly& g, long d, u64 p, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (udeg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  for (;;) {
    UPoly a(static_cast<std::size_t>(udeg(g)));
    for (auto& c : a) c = coeff(rng);
    utrim(a);
    if (udeg(a) < 1) continue;
    UPoly b = usub(upowmod(a, e, g, p), UPoly{1}, p);
    UPoly u = ugcd(g, b, p);
    if (udeg(u) > 0 && udeg(u) < udeg(g)) {
      edf(u, d, p, rng, out);
      edf(udiv(g, u, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<UPoly> factor_mod_p(const UPoly& f, u64 p) {
  std::mt19937_64 rng(0x5eed1e55ULL ^ p);
  std::vector<UPoly> out;
  for (auto& [g, d] : ddf(make_monic(f, p), p)) edf(g, d, p, rng, out);
  return out;
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void reduce_mod(ZPoly& f, const mpz_class& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  detail::trim(f);
}

// Lift F = lc * g0 * h0 (mod p) with g0 monic to F = G*H (mod M).
void hensel_step(const ZPoly& F, const UPoly& g0, const UPoly& h0, u64 p, const mpz_class& M, ZPoly& G, ZPoly& H) {
  UPoly s, t;
  uxgcd(g0, h0, p, s, t);
  G = lift(g0);
  H = lift(h0);
  mpz_class m = static_cast<unsigned long>(p);
  while (m < M) {
    ZPoly diff = detail::sub(F, detail::mul(G, H));
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    UPoly e = reduce(diff, p);
    if (!e.empty()) {
      UPoly q, r;
      udivmod(umul(t, e, p), g0, p, q, r);
      UPoly dH = uadd(umul(s, e, p), umul(q, h0, p), p);
      ZPoly dg = lift(r), dh = lift(dH);
      if (G.size() < dg.size()) G.resize(dg.size(), mpz_class(0));
      if (H.size() < dh.size()) H.resize(dh.size(), mpz_class(0));
      for (std::size_t i = 0; i < dg.size(); ++i) G[i] += m * dg[i];
      for (std::size_t i = 0; i < dh.size(); ++i) H[i] += m * dh[i];
    }
    m *= static_cast<unsigned long>(p);
  }
  reduce_mod(G, M);
  reduce_mod(H, M);
}

// Monic lifts of the modular factors, modulo M.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<UPoly>& factors, u64 p, const mpz_class& M) {
  std::vector<ZPoly> out;
  ZPoly F = f;
  reduce_mod(F, M);
  u64 lc = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    UPoly rest{lc};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = umul(rest, factors[j], p);
    ZPoly G, H;
    hensel_step(F, factors[i], rest, p, M, G, H);
    out.push_back(std::move(G));
    F = std::move(H);
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), M.get_mpz_t());
  for (auto& c : F) c *= inv;
  reduce_mod(F, M);
  out.push_back(std::move(F));
  return out;
}

void symmetric(ZPoly& f, const mpz_class& M) {
  mpz_class half = M / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  detail::trim(f);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const mpz_class& M) {
  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    do {
      ZPoly cand{f.back()};
      for (std::size_t i : idx) {
        cand = detail::mul(cand, lifted[i]);
        reduce_mod(cand, M);
      }
      symmetric(cand, M);
      cand = detail::primitive_part(cand);
      if (auto q = detail::divide_exact(f, cand)) {
        found.push_back(cand);
        f = detail::primitive_part(*q);
        for (std::size_t i = idx.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
        hit = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!hit) ++s;
  }
  if (f.size() > 1) found.push_back(f);
  return found;
}

// Irreducible factors of a primitive square-free polynomial with nonzero
// constant term and degree at least 2.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  ZPoly df = detail::derivative(f);

  u64 best_p = 0;
  std::vector<UPoly> best;
  int good = 0;
  for (u64 p = 3; good < 20; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    UPoly fp = reduce(f, p);
    if (udeg(ugcd(fp, uderivative(fp, p), p)) > 0) continue;
    std::vector<UPoly> fac = factor_mod_p(fp, p);
    ++good;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {f};
    if (good >= 5 && best.size() <= 10) break;
  }

  // Coefficient bound for any factor times the leading coefficient.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  bound *= abs(f.back());
  mpz_class M = static_cast<unsigned long>(best_p);
  while (M <= bound) M *= static_cast<unsigned long>(best_p);

  std::vector<ZPoly> lifted = multifactor_lift(f, best, best_p, M);
  return recombine(f, std::move(lifted), M);
}

}  // namespace

Factorization factor(const PrimitiveRep& p, std::size_t degree_cap) {
  if (p.degree() > degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(p.degree()) + " exceeds the factorization cap " +
                                                  std::to_string(degree_cap));
  Factorization out;
  if (p.is_one()) return out;
  std::vector<ZPoly> parts = detail::squarefree_decomposition(p.coeffs());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const ZPoly& part = parts[i];
    if (part.size() <= 1) continue;
    std::vector<ZPoly> irr = part.size() == 2 ? std::vector<ZPoly>{part} : factor_squarefree(part);
    for (auto& g : irr) out.push_back({PrimitiveRep::from_canonical(detail::primitive_part(g)), static_cast<unsigned>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

Factorization factor(const LaurentPoly& p, std::size_t degree_cap) {
  return factor(normalize(p), degree_cap);
}

}  // namespace ialex
