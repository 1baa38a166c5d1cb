#pragma once

// Exact sequences of polynomials and of torsion modules.
//
// For a bounded exact sequence with polynomials Delta_0..Delta_{n-1}, the
// splittings delta_0..delta_n satisfy Delta_j ~ delta_j * delta_{j+1}, so
// delta_j is the factor shared by Delta_{j-1} and Delta_j.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ialex/gmodule.hpp"
#include "ialex/laurent.hpp"

namespace ialex {

using PolyList = std::vector<PrimitiveRep>;

struct PolySequence {
  PolyList polys;
  std::optional<PolyList> splittings;
};

// Product of the odd terms over the product of the even terms is a unit.
bool check_alternating_product(const PolyList& polys);

// Dividing in from the outside. Throws NotExactCompatible.
PolyList subpolynomials(const PolyList& polys);

// Inverse direction: Delta_j = delta_j * delta_{j+1}.
PolyList sequence_from_splittings(const PolyList& deltas);

struct CompletedSequence {
  PolyList polys;
  PolyList splittings;
  // True when the alternating product check applied (both end splittings ~ 1).
  bool alternating_checked = false;
};

// Fill unknown entries (nullopt) from the splittings that the known runs
// determine. `junction` maps a splitting position 0..n to a supplied value.
// Throws MissingSplitting or NonDividingSplitting.
CompletedSequence solve_missing_third(const std::vector<std::optional<PrimitiveRep>>& known,
                                      const std::map<std::size_t, PrimitiveRep>& junction);

// 0 -> M_0 -> M_1 -> ... -> M_{n-1} -> 0. maps[i] presents M_i -> M_{i+1}
// with one row per torsion generator of M_{i+1} and one column per torsion
// generator of M_i.
struct ModuleSequence {
  std::vector<FgGammaModule> modules;
  std::vector<GammaMatrix> maps;
};

struct SequenceCheck {
  bool well_defined = true;
  bool composition_zero = true;
  bool alternating_orders = true;
  bool ok() const { return well_defined && composition_zero && alternating_orders; }
};

// Throws NotTorsion when a module has free rank, SchemaError on dimension
// mismatches.
SequenceCheck check_module_sequence(const ModuleSequence& seq);

// Restriction to the prime-primary summands. Throws NotTorsion, NotPrime, and
// NotExactCompatible when the input or the restricted sequence fails its check.
ModuleSequence split_primary(const ModuleSequence& seq, const PrimitiveRep& prime,
                             std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace ialex
