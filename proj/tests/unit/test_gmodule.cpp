#include "doctest.h"
#include "generators.hpp"
#include "ialex/error.hpp"
#include "ialex/gmodule.hpp"
#include "oracles.hpp"

using namespace ialex;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }
PrimitiveRep R(const char* s) { return parse_primitive(s); }
FgGammaModule cyc(const char* s) { return FgGammaModule::cyclic(R(s)); }

GammaMatrix random_matrix(gen::Rng& rng, std::size_t rows, std::size_t cols, int max_degree) {
  GammaMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (gen::coin(rng, 0.25)) continue;
      std::vector<Rational> c;
      for (int d = 0; d <= gen::uniform(rng, 0, max_degree); ++d) c.push_back(gen::uniform(rng, -2, 2));
      m.at(i, j) = LaurentPoly(gen::uniform(rng, -1, 1), c);
    }
  return m;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithForm id = smith_normal_form(GammaMatrix::identity(2));
  CHECK(id.factors == std::vector<PrimitiveRep>{PrimitiveRep::one(), PrimitiveRep::one()});
  CHECK(cokernel(GammaMatrix::identity(2)).is_zero());

  SmithForm d = smith_normal_form(GammaMatrix::diagonal({L("t - 1"), L("t - 1")}));
  CHECK(d.factors == std::vector<PrimitiveRep>{R("t - 1"), R("t - 1")});

  GammaMatrix m = GammaMatrix::from_rows({{L("t - 1"), L("1")}, {L("0"), L("t + 1")}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.factors == std::vector<PrimitiveRep>{PrimitiveRep::one(), R("t^2 - 1")});
  CHECK(cokernel(m) == FgGammaModule(0, {R("t^2 - 1")}));

  CHECK(cokernel(GammaMatrix::from_rows({{L("t - 1")}})) == cyc("t - 1"));
  CHECK(cokernel(GammaMatrix(0, 3)) == FgGammaModule::free(3));
  CHECK(cokernel(GammaMatrix(2, 3)) == FgGammaModule::free(3));
  CHECK_THROWS_AS(GammaMatrix::from_rows({{L("1"), L("2")}, {L("3")}}), Error);
}

TEST_CASE("smith form agrees with determinantal divisors and transforms") {
  gen::Rng rng(21);
  for (int it = 0; it < 60; ++it) {
    std::size_t r = static_cast<std::size_t>(gen::uniform(rng, 1, 4)), c = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    GammaMatrix m = random_matrix(rng, r, c, 2);
    SmithForm s = smith_normal_form(m, true);
    auto expected = oracle::determinantal_invariant_factors(m);
    REQUIRE(s.factors.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(s.factors[k].coeffs() == expected[k]);
    CHECK(s.rank == expected.size());
    CHECK(s.free_rank == c - s.rank);
    for (std::size_t k = 0; k + 1 < s.factors.size(); ++k) CHECK(divides(s.factors[k], s.factors[k + 1]));

    REQUIRE(s.left);
    REQUIRE(s.right);
    GammaMatrix dm = *s.left * m * *s.right;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (i == j && i < s.rank)
          CHECK(similar(dm.at(i, j), s.factors[i].to_laurent()));
        else
          CHECK(dm.at(i, j).is_zero());
      }
  }
}

TEST_CASE("module canonical form") {
  FgGammaModule m(1, {R("t - 1"), R("t + 1"), PrimitiveRep::one()});
  CHECK(m.free_rank() == 1);
  CHECK(m.torsion() == std::vector<PrimitiveRep>{R("t^2 - 1")});
  FgGammaModule n(0, {R("t^2 - 1"), R("t - 1")});
  CHECK(n.torsion() == std::vector<PrimitiveRep>{R("t - 1"), R("t^2 - 1")});
  CHECK(cokernel(n.presentation()) == n);
}

TEST_CASE("order polynomial examples") {
  CHECK(order_polynomial(cyc("t - 1")) == R("t - 1"));
  CHECK(order_polynomial(FgGammaModule::zero()).is_one());
  CHECK(order_polynomial(direct_sum(cyc("t - 1"), cyc("t^2 - t + 1"))) == R("t - 1") * R("t^2 - t + 1"));
  CHECK_THROWS_AS(order_polynomial(FgGammaModule::free(1)), Error);
}

TEST_CASE("primary component examples") {
  FgGammaModule m = FgGammaModule::cyclic(R("t - 1") * R("t - 1") * R("t + 1"));
  CHECK(primary_component(m, R("t - 1")) == FgGammaModule::cyclic(R("t - 1") * R("t - 1")));
  CHECK(primary_component(m, R("t^2 - t + 1")).is_zero());
  FgGammaModule two = direct_sum(cyc("t - 1"), cyc("t^2 - 1"));
  CHECK(primary_component(two, R("t - 1")) == direct_sum(cyc("t - 1"), cyc("t - 1")));
  try {
    primary_component(FgGammaModule::free(1), R("t - 1"));
    FAIL("expected NotTorsion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTorsion);
  }
  try {
    primary_component(m, R("t^2 - 1"));
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
}

TEST_CASE("conjugate, tensor, tor, kunneth examples") {
  CHECK(conjugate(cyc("t - 1")) == cyc("t - 1"));
  CHECK(conjugate(cyc("2*t - 1")) == cyc("t - 2"));
  CHECK(conjugate(FgGammaModule::free(3)) == FgGammaModule::free(3));

  CHECK(tensor(cyc("t - 1"), cyc("t + 1")).is_zero());
  CHECK(tensor(FgGammaModule::free(1), cyc("t^2 + 1")) == cyc("t^2 + 1"));
  CHECK(tensor(FgGammaModule::cyclic(R("t - 1") * R("t + 1")), FgGammaModule::cyclic(R("t - 1") * R("t^2 - t + 1"))) ==
        cyc("t - 1"));
  CHECK(tensor(FgGammaModule::free(2), FgGammaModule::free(3)) == FgGammaModule::free(6));

  CHECK(tor(FgGammaModule::free(1), cyc("t - 1")).is_zero());
  CHECK(tor(cyc("t - 1"), cyc("t - 1")) == cyc("t - 1"));
  CHECK(tor(cyc("t - 1"), cyc("t + 1")).is_zero());

  GradedModule left{cyc("t - 1")}, right{cyc("t - 1")};
  CHECK(kunneth(left, right, 0) == cyc("t - 1"));
  CHECK(kunneth(left, right, 1) == cyc("t - 1"));
  CHECK(kunneth(left, right, 2).is_zero());
  GradedModule sphere{FgGammaModule::free(1), FgGammaModule::zero(), FgGammaModule::free(1)};
  CHECK(kunneth(sphere, right, 2) == cyc("t - 1"));
  CHECK(kunneth(sphere, right, 1).is_zero());
  for (long i = 0; i < 4; ++i) CHECK(kunneth({cyc("t + 1")}, right, i).is_zero());
}

TEST_CASE("module properties") {
  gen::Rng rng(22);
  const auto& pool = gen::prime_pool();
  auto random_module = [&](bool torsion_only) {
    std::vector<PrimitiveRep> orders;
    long count = gen::uniform(rng, 0, 3);
    for (long j = 0; j < count; ++j) {
      PrimitiveRep o;
      for (long e = gen::uniform(rng, 1, 3); e > 0; --e) o = o * pool[static_cast<std::size_t>(gen::uniform(rng, 0, 6))];
      orders.push_back(o);
    }
    return FgGammaModule(torsion_only ? 0 : static_cast<std::size_t>(gen::uniform(rng, 0, 2)), orders);
  };
  for (int it = 0; it < 60; ++it) {
    FgGammaModule a = random_module(true), b = random_module(true), c = random_module(false);
    CHECK(order_polynomial(direct_sum(a, b)) == order_polynomial(a) * order_polynomial(b));

    FgGammaModule reassembled;
    for (const auto& pp : factor(order_polynomial(a)))
      reassembled = direct_sum(reassembled, primary_component(a, pp.prime));
    CHECK(reassembled == a);
    std::vector<PrimitiveRep> ed = elementary_divisors(a);
    CHECK(FgGammaModule(0, ed) == a);

    CHECK(tensor(a, c) == tensor(c, a));
    CHECK(tor(a, c) == tor(c, a));
    CHECK(tensor(direct_sum(a, b), c) == direct_sum(tensor(a, c), tensor(b, c)));
    CHECK(tor(direct_sum(a, b), c) == direct_sum(tor(a, c), tor(b, c)));

    CHECK(conjugate(conjugate(c)) == c);
    CHECK(order_polynomial(conjugate(a)) == involute(order_polynomial(a)));

    // Quotients of a by random extra relations: their primes divide order(a).
    if (a.is_zero()) continue;
    GammaMatrix pres = a.presentation();
    GammaMatrix extra(1, pres.cols());
    for (std::size_t j = 0; j < pres.cols(); ++j)
      extra.at(0, j) = pool[static_cast<std::size_t>(gen::uniform(rng, 0, 6))].to_laurent();
    FgGammaModule quotient = cokernel(stack_rows(pres, extra));
    PrimitiveRep oq = order_polynomial(quotient);
    CHECK(divides(oq, order_polynomial(a)));
    for (const auto& pp : factor(oq)) CHECK(divides(pp.prime, order_polynomial(a)));
  }
}
