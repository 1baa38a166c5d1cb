#include <algorithm>

#include "ialex/error.hpp"
#include "ialex/gmodule.hpp"

namespace ialex {

FgGammaModule::FgGammaModule(std::size_t free_rank, std::vector<PrimitiveRep> orders) : free_rank_(free_rank) {
  // Smith form of a diagonal matrix: a gcd/lcm sweep over all pairs.
  std::erase_if(orders, [](const PrimitiveRep& p) { return p.is_one(); });
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      if (divides(orders[i], orders[j])) continue;
      PrimitiveRep g = gcd(orders[i], orders[j]);
      PrimitiveRep l = *divide(orders[i] * orders[j], g);
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  std::erase_if(orders, [](const PrimitiveRep& p) { return p.is_one(); });
  torsion_ = std::move(orders);
}

GammaMatrix FgGammaModule::presentation() const {
  GammaMatrix m(torsion_.size(), generator_count());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m.at(i, i) = torsion_[i].to_laurent();
  return m;
}

FgGammaModule cokernel(const GammaMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return FgGammaModule(s.free_rank, s.factors);
}

PrimitiveRep order_polynomial(const FgGammaModule& m) {
  if (!m.is_torsion())
    throw Error(ErrorCode::NotTorsion, "order polynomial of a module with free rank " + std::to_string(m.free_rank()));
  return product(m.torsion());
}

FgGammaModule direct_sum(const FgGammaModule& a, const FgGammaModule& b) {
  std::vector<PrimitiveRep> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgGammaModule(a.free_rank() + b.free_rank(), std::move(orders));
}

FgGammaModule primary_component(const FgGammaModule& m, const PrimitiveRep& prime, std::size_t degree_cap) {
  if (!m.is_torsion())
    throw Error(ErrorCode::NotTorsion, "primary component of a module with free rank " + std::to_string(m.free_rank()));
  require_prime(prime, degree_cap);
  std::vector<PrimitiveRep> orders;
  for (const auto& d : m.torsion()) orders.push_back(pow(prime, multiplicity(prime, d)));
  return FgGammaModule(0, std::move(orders));
}

FgGammaModule conjugate(const FgGammaModule& m) {
  std::vector<PrimitiveRep> orders;
  for (const auto& d : m.torsion()) orders.push_back(involute(d));
  return FgGammaModule(m.free_rank(), std::move(orders));
}

FgGammaModule tensor(const FgGammaModule& a, const FgGammaModule& b) {
  std::vector<PrimitiveRep> orders;
  for (std::size_t k = 0; k < a.free_rank(); ++k) orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  for (std::size_t k = 0; k < b.free_rank(); ++k) orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
  for (const auto& p : a.torsion())
    for (const auto& q : b.torsion()) orders.push_back(gcd(p, q));
  return FgGammaModule(a.free_rank() * b.free_rank(), std::move(orders));
}

FgGammaModule tor(const FgGammaModule& a, const FgGammaModule& b) {
  std::vector<PrimitiveRep> orders;
  for (const auto& p : a.torsion())
    for (const auto& q : b.torsion()) orders.push_back(gcd(p, q));
  return FgGammaModule(0, std::move(orders));
}

FgGammaModule kunneth(const GradedModule& left, const GradedModule& right, long i) {
  FgGammaModule out;
  for (long r = 0; r < static_cast<long>(left.size()); ++r) {
    long s = i - r;
    if (s >= 0 && s < static_cast<long>(right.size()))
      out = direct_sum(out, tensor(left[static_cast<std::size_t>(r)], right[static_cast<std::size_t>(s)]));
    s = i - 1 - r;
    if (s >= 0 && s < static_cast<long>(right.size()))
      out = direct_sum(out, tor(left[static_cast<std::size_t>(r)], right[static_cast<std::size_t>(s)]));
  }
  return out;
}

std::vector<PrimitiveRep> elementary_divisors(const FgGammaModule& m, std::size_t degree_cap) {
  std::vector<PrimitiveRep> out;
  for (const auto& d : m.torsion())
    for (const auto& f : factor(d, degree_cap)) out.push_back(pow(f.prime, f.multiplicity));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ialex
