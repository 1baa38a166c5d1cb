#pragma once

// Simplicial homology with local coefficients in a Gamma-module, and the E2
// pages built from it.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ialex/bounds.hpp"
#include "ialex/engine.hpp"
#include "ialex/gmodule.hpp"

namespace ialex {

using Simplex = std::vector<long>;

// Closed under faces; simplices_[d] lists the d-simplices in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Throws EmptyComplex or SchemaError (repeated vertex, negative index).
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  long dimension() const { return static_cast<long>(simplices_.size()) - 1; }
  const std::vector<Simplex>& simplices(long d) const;
  std::size_t count(long d) const { return simplices(d).size(); }
  bool contains(const Simplex& s) const;

 private:
  std::vector<std::vector<Simplex>> simplices_;
};

// Edge (u, v) with u < v -> unit transporting the stalk at u to the stalk at v.
using Monodromy = std::map<std::pair<long, long>, LaurentPoly>;

class TwistedComplex {
 public:
  // Throws SchemaError for malformed edges or non-unit values, and
  // CocycleViolation when a triangle's transports disagree.
  TwistedComplex(SimplicialComplex complex, Monodromy monodromy, FgGammaModule stalk);

  const SimplicialComplex& complex() const { return complex_; }
  const FgGammaModule& stalk() const { return stalk_; }
  // Transport along an ordered edge; 1 when unspecified.
  LaurentPoly transport(long u, long v) const;

 private:
  SimplicialComplex complex_;
  Monodromy monodromy_;
  FgGammaModule stalk_;
};

GradedModule twisted_homology(const TwistedComplex& tc);

// One complex with a local system per link degree (missing degrees are trivial).
struct BaseFamily {
  SimplicialComplex complex;
  std::vector<Monodromy> monodromy_by_degree;
};

// Entries keyed (base dimension, p, q). Throws NotTorsionEntry.
E2Table e2_link_page(const BaseFamily& base, const GradedModule& link_modules);
E2Table e2_cone_page(const BaseFamily& base, const GradedModule& link_modules, long codim, const Perversity& p);

// Product of the entries on the antidiagonal p + q = j.
PrimitiveRep abutment_divisor_bound(const E2Table& table, long j);

}  // namespace ialex
