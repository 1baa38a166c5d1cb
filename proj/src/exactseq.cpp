#include "ialex/exactseq.hpp"

#include <string>

#include "ialex/error.hpp"

namespace ialex {

namespace {

std::string pos(std::size_t j) { return std::to_string(j); }

bool congruent_zero(const LaurentPoly& x, const PrimitiveRep& modulus) {
  if (x.is_zero()) return true;
  return euclidean_divide(x, modulus.to_laurent()).remainder.is_zero();
}

LaurentPoly reduce_mod(const LaurentPoly& x, const LaurentPoly& modulus) {
  if (x.is_zero()) return x;
  return euclidean_divide(x, modulus).remainder;
}

}  // namespace

bool check_alternating_product(const PolyList& polys) {
  PrimitiveRep odd, even;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (j % 2 == 0)
      odd = odd * polys[j];
    else
      even = even * polys[j];
  }
  return odd == even;
}

PolyList subpolynomials(const PolyList& polys) {
  PolyList deltas{PrimitiveRep::one()};
  for (std::size_t j = 0; j < polys.size(); ++j) {
    auto next = divide(polys[j], deltas.back());
    if (!next)
      throw Error(ErrorCode::NotExactCompatible, "splitting " + to_string(deltas.back()) + " does not divide term " +
                                                     pos(j) + " (" + to_string(polys[j]) + ")");
    deltas.push_back(std::move(*next));
  }
  if (!deltas.back().is_one())
    throw Error(ErrorCode::NotExactCompatible, "final splitting is " + to_string(deltas.back()) + ", not 1");
  return deltas;
}

PolyList sequence_from_splittings(const PolyList& deltas) {
  PolyList out;
  for (std::size_t j = 0; j + 1 < deltas.size(); ++j) out.push_back(deltas[j] * deltas[j + 1]);
  return out;
}

CompletedSequence solve_missing_third(const std::vector<std::optional<PrimitiveRep>>& known,
                                      const std::map<std::size_t, PrimitiveRep>& junction) {
  const std::size_t n = known.size();
  std::vector<std::optional<PrimitiveRep>> delta(n + 1);
  for (const auto& [j, d] : junction) {
    if (j > n) throw Error(ErrorCode::SchemaError, "splitting position " + pos(j) + " is outside 0.." + pos(n));
    delta[j] = d;
  }
  const std::vector<std::optional<PrimitiveRep>> supplied = delta;

  // Propagate splittings through each maximal run of known terms.
  for (std::size_t l = 0; l < n;) {
    if (!known[l]) {
      ++l;
      continue;
    }
    std::size_t r = l;
    while (r + 1 < n && known[r + 1]) ++r;
    std::optional<std::size_t> anchor;
    for (std::size_t j = l; j <= r + 1 && !anchor; ++j)
      if (supplied[j]) anchor = j;
    if (!anchor) {
      if (l == 0) {
        anchor = 0;
        delta[0] = PrimitiveRep::one();
      } else if (r + 1 == n) {
        anchor = n;
        delta[n] = PrimitiveRep::one();
      } else {
        throw Error(ErrorCode::MissingSplitting,
                    "no splitting supplied for the known terms " + pos(l) + ".." + pos(r));
      }
    }
    auto settle = [&](std::size_t j, PrimitiveRep value) {
      if (supplied[j] && *supplied[j] != value)
        throw Error(ErrorCode::NonDividingSplitting, "supplied splitting at position " + pos(j) + " (" +
                                                         to_string(*supplied[j]) + ") disagrees with the derived " +
                                                         to_string(value));
      delta[j] = std::move(value);
    };
    for (std::size_t j = *anchor; j <= r; ++j) {
      auto q = divide(*known[j], *delta[j]);
      if (!q)
        throw Error(ErrorCode::NonDividingSplitting, "splitting " + to_string(*delta[j]) + " does not divide term " +
                                                         pos(j) + " (" + to_string(*known[j]) + ")");
      settle(j + 1, std::move(*q));
    }
    for (std::size_t j = *anchor; j > l; --j) {
      auto q = divide(*known[j - 1], *delta[j]);
      if (!q)
        throw Error(ErrorCode::NonDividingSplitting, "splitting " + to_string(*delta[j]) + " does not divide term " +
                                                         pos(j - 1) + " (" + to_string(*known[j - 1]) + ")");
      settle(j - 1, std::move(*q));
    }
    l = r + 1;
  }

  if (!delta[0]) delta[0] = PrimitiveRep::one();
  if (!delta[n]) delta[n] = PrimitiveRep::one();
  CompletedSequence out;
  for (std::size_t j = 0; j <= n; ++j) {
    if (!delta[j]) throw Error(ErrorCode::MissingSplitting, "splitting at position " + pos(j) + " is undetermined");
    out.splittings.push_back(*delta[j]);
  }
  for (std::size_t j = 0; j < n; ++j) out.polys.push_back(known[j] ? *known[j] : *delta[j] * *delta[j + 1]);
  if (out.splittings.front().is_one() && out.splittings.back().is_one()) {
    out.alternating_checked = true;
    if (!check_alternating_product(out.polys))
      throw Error(ErrorCode::NonDividingSplitting, "completed sequence fails the alternating product check");
  }
  return out;
}

SequenceCheck check_module_sequence(const ModuleSequence& seq) {
  const auto& mods = seq.modules;
  for (std::size_t i = 0; i < mods.size(); ++i)
    if (!mods[i].is_torsion())
      throw Error(ErrorCode::NotTorsion, "module " + pos(i) + " has free rank " + std::to_string(mods[i].free_rank()));
  std::size_t expected = mods.empty() ? 0 : mods.size() - 1;
  if (seq.maps.size() != expected)
    throw Error(ErrorCode::SchemaError,
                "expected " + std::to_string(expected) + " maps, got " + std::to_string(seq.maps.size()));
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const auto& m = seq.maps[i];
    if (m.rows() != mods[i + 1].torsion().size() || m.cols() != mods[i].torsion().size())
      throw Error(ErrorCode::SchemaError, "map " + pos(i) + " has shape " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + ", expected " +
                                              std::to_string(mods[i + 1].torsion().size()) + "x" +
                                              std::to_string(mods[i].torsion().size()));
  }

  SequenceCheck check;
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const auto& m = seq.maps[i];
    const auto& src = mods[i].torsion();
    const auto& tgt = mods[i + 1].torsion();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!congruent_zero(src[c].to_laurent() * m.at(r, c), tgt[r])) check.well_defined = false;
  }
  for (std::size_t i = 0; i + 1 < seq.maps.size(); ++i) {
    GammaMatrix comp = seq.maps[i + 1] * seq.maps[i];
    const auto& tgt = mods[i + 2].torsion();
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c)
        if (!congruent_zero(comp.at(r, c), tgt[r])) check.composition_zero = false;
  }
  PolyList orders;
  for (const auto& m : mods) orders.push_back(order_polynomial(m));
  check.alternating_orders = check_alternating_product(orders);
  return check;
}

ModuleSequence split_primary(const ModuleSequence& seq, const PrimitiveRep& prime, std::size_t degree_cap) {
  require_prime(prime, degree_cap);
  SequenceCheck in = check_module_sequence(seq);
  if (!in.ok()) throw Error(ErrorCode::NotExactCompatible, "input module sequence fails its exactness checks");

  // For each module, the kept generators j with prime-power part p^b_j, the
  // cofactor u_j = d_j / p^b_j, and p^b_j itself.
  struct Part {
    std::vector<std::size_t> index;
    std::vector<LaurentPoly> cofactor;
    std::vector<LaurentPoly> power;
    std::vector<PrimitiveRep> orders;
  };
  std::vector<Part> parts;
  ModuleSequence out;
  for (const auto& m : seq.modules) {
    Part part;
    for (std::size_t j = 0; j < m.torsion().size(); ++j) {
      unsigned b = multiplicity(prime, m.torsion()[j]);
      if (b == 0) continue;
      PrimitiveRep pb = pow(prime, b);
      part.index.push_back(j);
      part.cofactor.push_back(divide(m.torsion()[j], pb)->to_laurent());
      part.power.push_back(pb.to_laurent());
      part.orders.push_back(pb);
    }
    out.modules.emplace_back(0, part.orders);
    parts.push_back(std::move(part));
  }

  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const Part& src = parts[i];
    const Part& tgt = parts[i + 1];
    // The canonical form of a p-primary module keeps its chain order, so row
    // and column positions carry over from the kept generators.
    GammaMatrix r(tgt.index.size(), src.index.size());
    for (std::size_t a = 0; a < tgt.index.size(); ++a) {
      Bezout bz = extended_gcd(tgt.cofactor[a], tgt.power[a]);
      // bz.gcd is 1 up to a rational; fold it into the inverse.
      LaurentPoly inv = bz.s * bz.gcd.unit_inverse();
      for (std::size_t c = 0; c < src.index.size(); ++c) {
        LaurentPoly image = src.cofactor[c] * seq.maps[i].at(tgt.index[a], src.index[c]);
        r.at(a, c) = reduce_mod(image * inv, tgt.power[a]);
      }
    }
    out.maps.push_back(std::move(r));
  }

  SequenceCheck res = check_module_sequence(out);
  if (!res.ok()) throw Error(ErrorCode::NotExactCompatible, "restricted sequence fails its exactness checks");
  return out;
}

}  // namespace ialex
