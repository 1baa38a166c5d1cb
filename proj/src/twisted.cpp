#include "ialex/twisted.hpp"

#include <algorithm>
#include <set>

#include "ialex/error.hpp"

namespace ialex {

namespace {

std::string edge_name(long u, long v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyComplex, "complex has no simplices");
  std::vector<std::set<Simplex>> by_dim;
  for (Simplex f : facets) {
    if (f.empty()) throw Error(ErrorCode::SchemaError, "empty simplex");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::SchemaError, "simplex repeats a vertex");
    if (f.front() < 0) throw Error(ErrorCode::SchemaError, "negative vertex index");
    const std::size_t k = f.size();
    if (by_dim.size() < k) by_dim.resize(k);
    // Every nonempty subset is a face.
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1UL << b)) face.push_back(f[b]);
      by_dim[face.size() - 1].insert(std::move(face));
    }
  }
  SimplicialComplex out;
  for (auto& s : by_dim) out.simplices_.emplace_back(s.begin(), s.end());
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(long d) const {
  static const std::vector<Simplex> kNone;
  if (d < 0 || d > dimension()) return kNone;
  return simplices_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& list = simplices(static_cast<long>(s.size()) - 1);
  return std::binary_search(list.begin(), list.end(), s);
}

TwistedComplex::TwistedComplex(SimplicialComplex complex, Monodromy monodromy, FgGammaModule stalk)
    : complex_(std::move(complex)), stalk_(std::move(stalk)) {
  if (complex_.dimension() < 0) throw Error(ErrorCode::EmptyComplex, "complex has no simplices");
  for (auto& [edge, value] : monodromy) {
    auto [u, v] = edge;
    if (value.is_zero() || !value.is_unit())
      throw Error(ErrorCode::SchemaError, "monodromy on edge " + edge_name(u, v) + " is not a unit: " + to_string(value));
    if (u == v) throw Error(ErrorCode::SchemaError, "monodromy on a degenerate edge " + edge_name(u, v));
    long a = std::min(u, v), b = std::max(u, v);
    if (!complex_.contains({a, b}))
      throw Error(ErrorCode::SchemaError, "monodromy edge " + edge_name(u, v) + " is not in the complex");
    LaurentPoly stored = u < v ? value : value.unit_inverse();
    auto [it, fresh] = monodromy_.emplace(std::make_pair(a, b), stored);
    if (!fresh && !(it->second == stored))
      throw Error(ErrorCode::CocycleViolation, "edge " + edge_name(a, b) + " is given two inconsistent transports");
  }
  for (const auto& tri : complex_.simplices(2)) {
    LaurentPoly lhs = transport(tri[0], tri[1]) * transport(tri[1], tri[2]);
    if (!(lhs == transport(tri[0], tri[2])))
      throw Error(ErrorCode::CocycleViolation, "cocycle condition fails on triangle (" + std::to_string(tri[0]) + "," +
                                                   std::to_string(tri[1]) + "," + std::to_string(tri[2]) + ")");
  }
}

LaurentPoly TwistedComplex::transport(long u, long v) const {
  if (u == v) return LaurentPoly(1);
  auto it = monodromy_.find({std::min(u, v), std::max(u, v)});
  if (it == monodromy_.end()) return LaurentPoly(1);
  return u < v ? it->second : it->second.unit_inverse();
}

namespace {

// Boundary of the p-chains lifted to the free cover, one row per generator
// of a p-simplex stalk.
GammaMatrix lifted_boundary(const TwistedComplex& tc, long p, std::size_t g) {
  const auto& src = tc.complex().simplices(p);
  const auto& tgt = tc.complex().simplices(p - 1);
  GammaMatrix d(src.size() * g, tgt.size() * g);
  if (p == 0) return d;
  for (std::size_t a = 0; a < src.size(); ++a) {
    const Simplex& s = src[a];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      std::size_t b = static_cast<std::size_t>(std::lower_bound(tgt.begin(), tgt.end(), face) - tgt.begin());
      // The stalk sits at the first vertex; dropping it moves the base point.
      LaurentPoly coeff = i == 0 ? tc.transport(s[0], s[1]) : LaurentPoly(1);
      if (i % 2 == 1) coeff = -coeff;
      for (std::size_t k = 0; k < g; ++k) d.at(a * g + k, b * g + k) += coeff;
    }
  }
  return d;
}

GammaMatrix lifted_relations(const GammaMatrix& r, std::size_t copies) {
  return block_diagonal(std::vector<GammaMatrix>(copies, r));
}

}  // namespace

GradedModule twisted_homology(const TwistedComplex& tc) {
  const long top = tc.complex().dimension();
  GradedModule out(static_cast<std::size_t>(top + 1));
  const std::size_t g = tc.stalk().generator_count();
  if (g == 0) return out;
  const GammaMatrix rel = tc.stalk().presentation();

  for (long p = 0; p <= top; ++p) {
    const std::size_t np = tc.complex().count(p);
    const std::size_t width = np * g;

    // Cycles: x with x*d in the relation span of the (p-1)-chains.
    GammaMatrix cycles;
    if (p == 0) {
      cycles = GammaMatrix::identity(width);
    } else {
      GammaMatrix stacked =
          stack_rows(lifted_boundary(tc, p, g), lifted_relations(rel, tc.complex().count(p - 1)));
      SmithForm s = smith_normal_form(stacked, true);
      const GammaMatrix& u = *s.left;
      cycles = GammaMatrix(u.rows() - s.rank, width);
      for (std::size_t i = s.rank; i < u.rows(); ++i)
        for (std::size_t j = 0; j < width; ++j) cycles.at(i - s.rank, j) = u.at(i, j);
    }

    // Basis of the cycle module: row k of D * V^-1 with D = U * cycles * V.
    SmithForm zs = smith_normal_form(cycles, true);
    const GammaMatrix& v = *zs.right;

    GammaMatrix bounds = lifted_relations(rel, np);
    if (p < top) {
      GammaMatrix d_next = lifted_boundary(tc, p + 1, g);
      bounds = stack_rows(d_next, bounds);
    }
    GammaMatrix coords(bounds.rows(), zs.rank);
    for (std::size_t r = 0; r < bounds.rows(); ++r) {
      for (std::size_t k = 0; k < zs.rank; ++k) {
        LaurentPoly wv;
        for (std::size_t j = 0; j < width; ++j)
          if (!bounds.at(r, j).is_zero() && !v.at(j, k).is_zero()) wv += bounds.at(r, j) * v.at(j, k);
        auto q = exact_divide(wv, zs.factors[k].to_laurent());
        if (!q) throw std::logic_error("boundary is not a cycle");
        coords.at(r, k) = std::move(*q);
      }
      // Coordinates beyond the rank must vanish for a genuine cycle.
      for (std::size_t k = zs.rank; k < width; ++k) {
        LaurentPoly wv;
        for (std::size_t j = 0; j < width; ++j)
          if (!bounds.at(r, j).is_zero() && !v.at(j, k).is_zero()) wv += bounds.at(r, j) * v.at(j, k);
        if (!wv.is_zero()) throw std::logic_error("boundary is not a cycle");
      }
    }
    out[static_cast<std::size_t>(p)] = cokernel(coords);
  }
  return out;
}

namespace {

E2Table page_from_stalks(const BaseFamily& base, const GradedModule& stalks) {
  E2Table table;
  const long dim = base.complex.dimension();
  for (long q = 0; q < static_cast<long>(stalks.size()); ++q) {
    Monodromy mono = q < static_cast<long>(base.monodromy_by_degree.size())
                         ? base.monodromy_by_degree[static_cast<std::size_t>(q)]
                         : Monodromy{};
    TwistedComplex tc(base.complex, mono, stalks[static_cast<std::size_t>(q)]);
    GradedModule h = twisted_homology(tc);
    for (long p = 0; p < static_cast<long>(h.size()); ++p) {
      const auto& m = h[static_cast<std::size_t>(p)];
      if (!m.is_torsion())
        throw Error(ErrorCode::NotTorsionEntry, "E2 entry (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                                    ") has free rank " + std::to_string(m.free_rank()));
      table[{dim, p, q}] = order_polynomial(m);
    }
  }
  return table;
}

}  // namespace

E2Table e2_link_page(const BaseFamily& base, const GradedModule& link_modules) {
  return page_from_stalks(base, link_modules);
}

E2Table e2_cone_page(const BaseFamily& base, const GradedModule& link_modules, long codim, const Perversity& p) {
  return page_from_stalks(base, cone_ih(link_modules, codim, p));
}

PrimitiveRep abutment_divisor_bound(const E2Table& table, long j) {
  PrimitiveRep out;
  for (const auto& [key, e] : table)
    if (std::get<1>(key) + std::get<2>(key) == j) out = out * e;
  return out;
}

}  // namespace ialex
