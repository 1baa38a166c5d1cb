#include "zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ialex::detail {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  mpz_class g = content(f);
  if (f.back() < 0) g = -g;
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(out[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, mpz_class(0));
  const mpz_class& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    q[k] = c;
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

namespace {

ZPoly pseudo_remainder(ZPoly r, const ZPoly& b) {
  const mpz_class& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    std::size_t shift = r.size() - 1 - db;
    mpz_class lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
    trim(r);
    // Keep growth in check.
    r = primitive_part(r);
  }
  return r;
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = primitive_part(a0);
  ZPoly b = primitive_part(b0);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

QPoly to_q(const ZPoly& f) {
  QPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  return out;
}

ZPoly to_primitive_z(const QPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class scale = den / f[i].get_den();
    out[i] = f[i].get_num() * scale;
  }
  trim(out);
  return primitive_part(out);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly derivative(const QPoly& f) {
  if (f.size() <= 1) return {};
  QPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, mpq_class(0));
  const mpq_class& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpq_class top = r[k + b.size() - 1];
    if (top == 0) continue;
    mpq_class c = top / lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    q[k] = c;
  }
  trim(q);
  trim(r);
}

namespace {

QPoly qdiv_exact(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) throw std::logic_error("inexact division in square-free decomposition");
  return q;
}

QPoly qgcd(const QPoly& a, const QPoly& b) {
  if (a.empty() && b.empty()) return {};
  return to_q(gcd(to_primitive_z(a), to_primitive_z(b)));
}

}  // namespace

std::vector<ZPoly> squarefree_decomposition(const ZPoly& f) {
  // Yun's algorithm over Q; the gcds themselves go through the integer PRS.
  std::vector<ZPoly> out;
  if (f.size() <= 1) return out;
  QPoly F = to_q(f);
  QPoly dF = derivative(F);
  QPoly a = qgcd(F, dF);
  QPoly b = qdiv_exact(F, a);
  QPoly c = qdiv_exact(dF, a);
  QPoly d = sub(c, derivative(b));
  while (b.size() > 1) {
    QPoly ai = d.empty() ? b : qgcd(b, d);
    out.push_back(to_primitive_z(ai));
    b = qdiv_exact(b, ai);
    c = qdiv_exact(d, ai);
    d = sub(c, derivative(b));
  }
  while (!out.empty() && out.back().size() <= 1) out.pop_back();
  return out;
}

}  // namespace ialex::detail
