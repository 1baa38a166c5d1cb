// Writes the fixture corpus: case files whose expected values come from the
// oracles and closed-form tables in tests/support, not from the library.
//
//   ialex_make_corpus tests/fixtures/corpus

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "generators.hpp"
#include "ialex/io.hpp"
#include "oracles.hpp"

using namespace ialex;
using nlohmann::json;
using io::write;

namespace {

struct Writer {
  std::filesystem::path dir;
  int counter = 0;

  void emit(const std::string& name, const json& body) {
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "%03d_", counter++);
    std::ofstream(dir / (prefix + name + ".json")) << body.dump(2) << "\n";
  }
  void plain(const std::string& name, const std::string& kind, const json& payload) {
    emit(name, json{{"kind", kind}, {"payload", payload}});
  }
  void verify(const std::string& name, const std::string& kind, const json& payload, const json& expect) {
    emit(name, json{{"kind", "verify"},
                    {"payload", {{"case", {{"kind", kind}, {"payload", payload}}}, {"expect", expect}}}});
  }
};

std::string zstr(const oracle::ZPoly& z) { return to_string(PrimitiveRep::from_canonical(z)); }

json disk_knot_payload(const DiskKnotData& d, const Perversity& p) {
  return json{{"n", d.n}, {"perversity", write(p)}, {"a", write(d.a)}, {"b", write(d.b)}, {"c", write(d.c)}};
}

json product_payload(const ProductSingularityInput& in) {
  json out{{"n", in.n},
           {"k", in.k},
           {"perversity", write(in.perversity)},
           {"sigma", write(in.sigma_homology)},
           {"link", write(in.link_modules)},
           {"c", write(in.c)}};
  if (in.a_high) out["a_high"] = write(*in.a_high);
  if (in.a) out["a"] = write(*in.a);
  if (in.lambda) out["lambda"] = write(*in.lambda);
  if (in.assume_zero_kernel) out["assume_zero_kernel"] = true;
  return out;
}

// The point-case table straight from a, b, c.
PolyList point_table(const DiskKnotData& d, const Perversity& p) {
  const long threshold = d.n - 1 - p.at(d.n);
  PolyList out;
  for (long i = 0; i <= d.n; ++i) {
    if (i < threshold)
      out.push_back(graded_at(d.b, i) * graded_at(d.c, i));
    else if (i == threshold)
      out.push_back(graded_at(d.c, i));
    else
      out.push_back(graded_at(d.c, i) * (i > 0 ? graded_at(d.a, i - 1) : PrimitiveRep()));
  }
  return out;
}

void factor_cases(Writer& w, gen::Rng& rng) {
  for (int it = 0; it < 8; ++it) {
    PrimitiveRep product;
    long used = 0, total = gen::uniform(rng, 2, 6);
    while (used < total) {
      long deg = gen::uniform(rng, 1, std::min<long>(3, total - used));
      PrimitiveRep q = gen::random_nonunit(rng, static_cast<int>(deg));
      if (static_cast<long>(q.degree()) != deg || !oracle::kronecker_irreducible(q.coeffs())) continue;
      product = product * q;
      used += deg;
    }
    std::map<PrimitiveRep, unsigned> counts;
    for (const auto& z : oracle::kronecker_factor(product.coeffs())) ++counts[PrimitiveRep::from_canonical(z)];
    json factors = json::array();
    for (const auto& [prime, m] : counts) factors.push_back(json::array({to_string(prime), m}));
    // A unit and a power of t in front do not change the answer.
    LaurentPoly shifted = product.to_laurent() * LaurentPoly::monomial(Rational(-3, 2), -2);
    w.verify("factor_kronecker_" + std::to_string(it), "factor", {{"poly", to_string(shifted)}},
             {{"status", "pass"}, {"values", {{"factors", factors}}}});
  }
  w.verify("factor_swinnerton_dyer", "factor", {{"poly", "t^4 - 10*t^2 + 1"}},
           {{"values", {{"factors", json::array({json::array({"t^4 - 10*t^2 + 1", 1})})}}}});
  w.verify("factor_degree_cap", "factor", {{"poly", std::string("t^70 - 1")}},
           {{"status", "error"}, {"error", {{"code", "DegreeCapExceeded"}}}});
}

void snf_cases(Writer& w, gen::Rng& rng) {
  for (int it = 0; it < 6; ++it) {
    auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 4)), c = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    GammaMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (gen::coin(rng, 0.2)) continue;
        LaurentPoly e;
        for (long k = gen::uniform(rng, 0, 2); k >= 0; --k) e += LaurentPoly::monomial(Rational(gen::uniform(rng, -3, 3)), k);
        m.at(i, j) = e;
      }
    json factors = json::array();
    for (const auto& z : oracle::determinantal_invariant_factors(m)) factors.push_back(zstr(z));
    w.verify("snf_determinantal_" + std::to_string(it), "snf", {{"matrix", write(m)}, {"cols", c}},
             {{"status", "pass"}, {"values", {{"factors", factors}, {"rank", factors.size()}}}});
  }
}

void seq_cases(Writer& w, gen::Rng& rng) {
  for (int it = 0; it < 4; ++it) {
    PolyList deltas = gen::random_deltas(rng, static_cast<std::size_t>(gen::uniform(rng, 2, 6)));
    // Delta_j = delta_j delta_{j+1}, written out here rather than by the library.
    PolyList polys;
    for (std::size_t j = 0; j + 1 < deltas.size(); ++j) polys.push_back(deltas[j] * deltas[j + 1]);
    w.verify("seq_subpolynomials_" + std::to_string(it), "seq", {{"op", "subpolynomials"}, {"polys", write(polys)}},
             {{"status", "pass"}, {"values", {{"splittings", write(deltas)}}}});
    w.verify("seq_check_exact_" + std::to_string(it), "seq", {{"op", "check"}, {"polys", write(polys)}},
             {{"status", "pass"}, {"values", {{"alternating", true}}}});
    polys.back() = polys.back() * gen::random_nonunit(rng);
    w.verify("seq_check_perturbed_" + std::to_string(it), "seq", {{"op", "check"}, {"polys", write(polys)}},
             {{"status", "fail"}, {"values", {{"alternating", false}}}});
  }
  w.verify("seq_solve_missing_third", "seq",
           {{"op", "solve"}, {"polys", json::array({"t^2 + 3*t + 2", "t^2 - 2*t - 3", nullptr})}, {"junction", {{"0", "t + 2"}}}},
           {{"status", "pass"}, {"values", {{"polys", json::array({"t^2 + 3*t + 2", "t^2 - 2*t - 3", "t - 3"})}}}});
  w.plain("seq_split_primary", "seq",
          {{"op", "split"},
           {"modules", json::array({json{{"torsion", {"t - 1"}}}, json{{"torsion", {"t^2 - 1"}}}, json{{"torsion", {"t + 1"}}}})},
           {"maps", json::array({json::array({json::array({"t + 1"})}), json::array({json::array({"1"})})})},
           {"prime", "t - 1"}});
}

void engine_cases(Writer& w, gen::Rng& rng) {
  for (int it = 0; it < 6; ++it) {
    long n = gen::uniform(rng, 3, 8);
    DiskKnotData d = gen::random_disk_knot(rng, n);
    Perversity p = gen::random_traditional(rng, n);
    json payload = disk_knot_payload(d, p);
    w.verify("ia_point_table_" + std::to_string(it), "ia-point", payload,
             {{"status", "pass"}, {"values", {{"threshold", n - 1 - p.at(n)}, {"ia", write(point_table(d, p))}}}});
    w.verify("ia_point_as_product_" + std::to_string(it), "ia-product", product_payload(gen::point_as_product(d, p)),
             {{"status", "pass"}, {"values", {{"ia", write(point_table(d, p))}}}});
  }
  for (int it = 0; it < 4; ++it) {
    gen::ProductInstance inst = gen::random_product(rng);
    w.plain("ia_product_" + inst.base->name + "_" + std::to_string(it), "ia-product", product_payload(inst.input));
  }
  w.verify("ia_product_point_n4", "ia-product",
           product_payload(gen::point_as_product(gen::random_disk_knot(rng, 4), Perversity::zero(4))),
           {{"status", "pass"}});

  // Normalization and duality on a locally flat knot: (t-1, Delta, 1, 1).
  w.plain("ia_dual_locally_flat", "ia-dual", {{"ia", json::array({"t - 1", "t^2 - t + 1", "1", "1"})}, {"n", 3}});
  w.verify("ia_normalization", "verify", {{"ia", json::array({"t - 1", "t^2 - t + 1", "1", "1"})}, {"n", 3}},
           {{"status", "pass"}});
  w.verify("ia_normalization_super", "verify",
           {{"ia", json::array({"1", "t^2 - t + 1", "t - 1", "1"})}, {"n", 3}, {"super", true}}, {{"status", "pass"}});
  w.verify("ia_point_superperverse", "ia-point",
           {{"n", 4}, {"perversity", json::array({1, 1, 1})}, {"a", json::array({"1", "1"})},
            {"b", json::array({"t - 1", "1"})}, {"c", json::array({"1", "1", "1"})}},
           {{"status", "error"}, {"error", {{"code", "SuperperversityNotAllowed"}}}});
}

void bounds_cases(Writer& w) {
  w.verify("bounds_allowed_c_only", "bounds",
           {{"op", "allowed"}, {"i", 1}, {"n", 5}, {"k", 3}, {"c", "2*t - 1"}, {"xi", json::array({"1", "1", "1"})}},
           {{"values", {{"primes", json::array({"2*t - 1"})}}}});
  w.verify("bounds_allowed_link", "bounds",
           {{"op", "allowed"}, {"i", 1}, {"n", 5}, {"k", 3}, {"c", "1"}, {"xi", json::array({"t - 1", "t^2 - t + 1"})}},
           {{"values", {{"primes", json::array({"t^2 - t + 1"})}}}});
  w.verify("bounds_exclude", "bounds",
           {{"op", "exclude"}, {"gamma", "t^2 + 1"}, {"i", 2}, {"k", 4}, {"perversity", json::array({0, 0, 0, 0, 0})},
            {"lambda", "2*t - 1"}, {"xi", json::array({"t - 1", "t^2 + 1", "1", "1"})}},
           {{"values", {{"excluded", true}}}});
  w.plain("bounds_general", "bounds",
          {{"op", "general"}, {"j", 2}, {"lambda", "t - 2"}, {"n", 6},
           {"strata", json::array({json{{"dim", 2}, {"components", json::array({json{{"xi", {"t - 1", "t^2 + 1"}}}})}}})}});
  w.verify("bounds_maxpower_empty", "bounds",
           {{"op", "maxpower"}, {"gamma", "t^2 + 1"}, {"j", 2}, {"gamma_j", 3}, {"table", json::array()}, {"n", 6},
            {"perversity", json::array({0, 0, 0, 0, 0})}},
           {{"values", {{"bound", 3}}}});
  w.verify("bounds_check_outside", "bounds",
           {{"op", "check"}, {"ia", "t^2 - 1"}, {"allowed", json::array({"t + 1"})}}, {{"status", "fail"}});
  w.plain("bounds_check_pass", "bounds",
          {{"op", "check"}, {"ia", "t^2 + 2*t + 1"}, {"allowed", json::array({"t + 1"})},
           {"power_bounds", json::array({json::array({"t + 1", 2})})}});
}

void twisted_cases(Writer& w) {
  w.verify("homology_twisted_circle", "homology",
           {{"simplices", json::array({{0, 1}, {1, 2}, {0, 2}})}, {"monodromy", {{"0,2", "t"}}}},
           {{"status", "pass"},
            {"values", {{"homology", json::array({json{{"free", 0}, {"torsion", {"t - 1"}}},
                                                 json{{"free", 0}, {"torsion", json::array()}}})}}}});
  for (const auto& base : gen::base_catalog()) {
    std::vector<long> betti = oracle::rational_betti(SimplicialComplex::from_facets(base.facets));
    json expected = json::array();
    for (long b : betti) expected.push_back(json{{"free", b}, {"torsion", json::array()}});
    w.verify("homology_untwisted_" + base.name, "homology", {{"simplices", base.facets}},
             {{"status", "pass"}, {"values", {{"homology", expected}}}});
  }
  w.verify("homology_cocycle_violation", "homology",
           {{"simplices", json::array({{0, 1, 2}})}, {"monodromy", {{"0,1", "t"}}}},
           {{"status", "error"}, {"error", {{"code", "CocycleViolation"}}}});
  w.plain("e2_point_base", "e2",
          {{"simplices", json::array({{0}})},
           {"link", json::array({json{{"torsion", {"t - 1"}}}, json{{"torsion", {"t^2 - t + 1"}}}})}});
  w.plain("e2_twisted_circle_cone", "e2",
          {{"simplices", json::array({{0, 1}, {1, 2}, {0, 2}})},
           {"monodromy_by_degree", json::array({json::object(), json{{"0,2", "t"}}})},
           {"link", json::array({json{{"torsion", {"t - 1"}}}, json{{"torsion", {"t^2 - t + 1"}}}, json{{"torsion", {"2*t - 1"}}}})},
           {"page", "cone"}, {"codim", 4}, {"perversity", json::array({0, 0, 1})}});
}

void aggregate_case(Writer& w) {
  w.plain("verify_aggregate", "verify",
          {{"cases", json::array({json{{"kind", "factor"}, {"payload", {{"poly", "t^6 - 1"}}}},
                                  json{{"kind", "ia-dual"}, {"payload", {{"ia", {"t - 1", "1", "1"}}, {"n", 2}}}}})}});
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s OUTPUT_DIR\n", argv[0]);
    return 2;
  }
  Writer w{argv[1]};
  std::filesystem::create_directories(w.dir);
  for (const auto& entry : std::filesystem::directory_iterator(w.dir))
    if (entry.path().extension() == ".json") std::filesystem::remove(entry.path());
  gen::Rng rng(20240601);
  factor_cases(w, rng);
  snf_cases(w, rng);
  seq_cases(w, rng);
  engine_cases(w, rng);
  bounds_cases(w);
  twisted_cases(w);
  aggregate_case(w);
  std::printf("wrote %d files to %s\n", w.counter, w.dir.string().c_str());
  return 0;
}
