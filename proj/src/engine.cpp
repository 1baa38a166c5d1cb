#include "ialex/engine.hpp"

#include <algorithm>

#include "ialex/error.hpp"

namespace ialex {

namespace {

std::string deg(long i) { return "degree " + std::to_string(i); }

const PrimitiveRep kOne;

PrimitiveRep t_minus_one() { return PrimitiveRep::from_canonical({Integer(-1), Integer(1)}); }

}  // namespace

Perversity::Perversity(std::vector<long> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidPerversity, "perversity needs at least the value at codimension 2");
  if (values_[0] != 0 && values_[0] != 1)
    throw Error(ErrorCode::InvalidPerversity, "p(2) must be 0 or 1, got " + std::to_string(values_[0]));
  for (std::size_t j = 0; j + 1 < values_.size(); ++j) {
    long d = values_[j + 1] - values_[j];
    if (d < 0 || d > 1)
      throw Error(ErrorCode::InvalidPerversity, "growth axiom fails between codimensions " + std::to_string(j + 2) +
                                                    " and " + std::to_string(j + 3));
  }
}

Perversity Perversity::zero(long max_codim) { return Perversity(std::vector<long>(static_cast<std::size_t>(max_codim - 1), 0)); }

Perversity Perversity::top(long max_codim) {
  std::vector<long> v;
  for (long k = 2; k <= max_codim; ++k) v.push_back(k - 2);
  return Perversity(std::move(v));
}

Perversity Perversity::lower_middle(long max_codim) {
  std::vector<long> v;
  for (long k = 2; k <= max_codim; ++k) v.push_back((k - 2) / 2);
  return Perversity(std::move(v));
}

Perversity Perversity::upper_middle(long max_codim) {
  std::vector<long> v;
  for (long k = 2; k <= max_codim; ++k) v.push_back((k - 1) / 2);
  return Perversity(std::move(v));
}

long Perversity::at(long codim) const {
  if (codim < 2 || codim > max_codim())
    throw Error(ErrorCode::PerversityOutOfRange, "perversity is defined on codimensions 2.." +
                                                     std::to_string(max_codim()) + ", queried " +
                                                     std::to_string(codim));
  return values_[static_cast<std::size_t>(codim - 2)];
}

Perversity superdual(const Perversity& p) {
  std::vector<long> q;
  for (long k = 2; k <= p.max_codim(); ++k) q.push_back(k - 1 - p.at(k));
  return Perversity(std::move(q));
}

GradedModule cone_ih(const GradedModule& link, long n, const Perversity& p) {
  const long threshold = n - 1 - p.at(n);
  GradedModule out(link.size());
  for (std::size_t i = 0; i < link.size(); ++i) {
    long d = static_cast<long>(i);
    // Degree 0 survives on both branches of the formula.
    if (d == 0 || d < threshold) out[i] = link[i];
  }
  return out;
}

PolyList ia_locally_flat(const PolyList& lambda) { return lambda; }

const PrimitiveRep& graded_at(const PolyList& seq, long i) {
  if (i < 0 || i >= static_cast<long>(seq.size())) return kOne;
  return seq[static_cast<std::size_t>(i)];
}

PrimitiveRep DiskKnotData::lambda_at(long i) const { return graded_at(b, i) * graded_at(c, i); }
PrimitiveRep DiskKnotData::nu_at(long i) const { return graded_at(a, i) * graded_at(b, i); }
PrimitiveRep DiskKnotData::mu_at(long i) const { return graded_at(c, i) * graded_at(a, i - 1); }

long DiskKnotData::top_degree() const {
  std::size_t len = std::max({a.size(), b.size(), c.size()});
  for (const auto* s : {&lambda, &nu, &mu})
    if (*s) len = std::max(len, (*s)->size());
  return std::max<long>(static_cast<long>(len), n + 1);
}

void validate_disk_knot(const DiskKnotData& data) {
  if (data.n < 2) throw Error(ErrorCode::InadmissibleData, "ambient dimension n must be at least 2");
  const long top = data.top_degree();
  auto check_supplied = [&](const std::optional<PolyList>& given, const char* name, auto derived) {
    if (!given) return;
    for (long i = 0; i < top; ++i)
      if (graded_at(*given, i) != (data.*derived)(i))
        throw Error(ErrorCode::InadmissibleData, std::string(name) + " at " + deg(i) + " is " +
                                                     to_string(graded_at(*given, i)) + " but the subpolynomials give " +
                                                     to_string((data.*derived)(i)));
  };
  check_supplied(data.lambda, "lambda", &DiskKnotData::lambda_at);
  check_supplied(data.nu, "nu", &DiskKnotData::nu_at);
  check_supplied(data.mu, "mu", &DiskKnotData::mu_at);

  auto check_range = [&](const PolyList& seq, const std::optional<std::pair<long, long>>& range, const char* name) {
    if (!range) return;
    for (long i = 0; i < static_cast<long>(seq.size()); ++i)
      if ((i < range->first || i > range->second) && !seq[static_cast<std::size_t>(i)].is_one())
        throw Error(ErrorCode::InadmissibleData,
                    std::string(name) + " at " + deg(i) + " lies outside its range and is not ~1");
  };
  check_range(data.a, data.a_range, "a");
  check_range(data.b, data.b_range, "b");
  check_range(data.c, data.c_range, "c");

  // ... -> nu_i -> lambda_i -> mu_i -> nu_{i-1} -> ... -> mu_0 -> 0
  PolyList chain;
  std::vector<long> degree_of;
  for (long i = top; i >= 0; --i) {
    chain.push_back(data.nu ? graded_at(*data.nu, i) : data.nu_at(i));
    chain.push_back(data.lambda ? graded_at(*data.lambda, i) : data.lambda_at(i));
    chain.push_back(data.mu ? graded_at(*data.mu, i) : data.mu_at(i));
    for (int r = 0; r < 3; ++r) degree_of.push_back(i);
  }
  PrimitiveRep delta;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    auto next = divide(chain[j], delta);
    if (!next)
      throw Error(ErrorCode::InadmissibleData, "the nu/lambda/mu chain is not exact at " + deg(degree_of[j]));
    delta = std::move(*next);
  }
  if (!delta.is_one()) throw Error(ErrorCode::InadmissibleData, "the nu/lambda/mu chain is not exact at " + deg(0));
}

std::string branch_name(PointBranch b) {
  switch (b) {
    case PointBranch::Lambda: return "lambda";
    case PointBranch::C: return "c";
    case PointBranch::Mu: return "mu";
  }
  return "";
}

PointResult ia_point(const DiskKnotData& data, const Perversity& p) {
  if (!p.is_traditional())
    throw Error(ErrorCode::SuperperversityNotAllowed,
                "superperverse values are only available through superduality");
  const long pn = p.at(data.n);
  validate_disk_knot(data);
  PointResult out;
  out.threshold = data.n - 1 - pn;
  for (long i = 0; i <= data.n; ++i) {
    if (i < out.threshold) {
      out.ia.push_back(data.lambda_at(i));
      out.branch.push_back(PointBranch::Lambda);
    } else if (i == out.threshold) {
      out.ia.push_back(graded_at(data.c, i));
      out.branch.push_back(PointBranch::C);
    } else {
      out.ia.push_back(data.mu_at(i));
      out.branch.push_back(PointBranch::Mu);
    }
  }
  return out;
}

std::vector<PrimitiveRep> ProductResult::ia() const {
  std::vector<PrimitiveRep> out;
  for (const auto& d : degrees) out.push_back(d.ia);
  return out;
}

ProductResult ia_product(const ProductSingularityInput& in) {
  const Perversity& p = in.perversity;
  if (!p.is_traditional())
    throw Error(ErrorCode::SuperperversityNotAllowed,
                "superperverse values are only available through superduality");
  if (in.k < 2 || in.n <= in.k)
    throw Error(ErrorCode::InadmissibleData, "need 2 <= k < n, got n=" + std::to_string(in.n) +
                                                 " k=" + std::to_string(in.k));
  const long threshold = in.k - p.at(in.k + 1);

  if (in.link_modules.empty() || !(in.link_modules[0] == FgGammaModule::cyclic(t_minus_one())))
    throw Error(ErrorCode::InadmissibleData, "link module in degree 0 must be Gamma/(t - 1)");
  for (long s = 1; s < static_cast<long>(in.link_modules.size()); ++s) {
    const auto& m = in.link_modules[static_cast<std::size_t>(s)];
    if (!m.is_torsion())
      throw Error(ErrorCode::InadmissibleData, "link module in " + deg(s) + " is not torsion");
    if (s >= in.k - 1 && !m.is_zero())
      throw Error(ErrorCode::InadmissibleData, "link module in " + deg(s) + " must vanish (degrees >= k - 1)");
  }
  if (in.sigma_homology.empty() || static_cast<long>(in.sigma_homology.size()) > in.n - in.k)
    throw Error(ErrorCode::InadmissibleData, "singular stratum homology must be graded over 0.." +
                                                 std::to_string(in.n - in.k - 1));
  if (in.a.has_value() == in.lambda.has_value())
    throw Error(ErrorCode::SchemaError, "exactly one of a or lambda must be supplied");
  if (!in.a_high && !in.assume_zero_kernel)
    throw Error(ErrorCode::SchemaError, "a_high is required unless assume_zero_kernel is set");

  ProductResult out;
  out.threshold = threshold;
  const auto& sigma = in.sigma_homology;
  const auto& link = in.link_modules;
  for (long i = 0; i <= in.n; ++i) {
    ProductDegree d;
    FgGammaModule full = kunneth(sigma, link, i);
    if (!full.is_torsion())
      throw Error(ErrorCode::InadmissibleData, "boundary link homology in " + deg(i) + " is not torsion");
    d.nu = order_polynomial(full);

    FgGammaModule high;
    for (long r = 0; r < static_cast<long>(sigma.size()); ++r) {
      const auto& sr = sigma[static_cast<std::size_t>(r)];
      long s = i - r;
      if (s != 0 && s >= threshold && s < static_cast<long>(link.size()))
        high = direct_sum(high, tensor(sr, link[static_cast<std::size_t>(s)]));
      s = i - 1 - r;
      if (s != 0 && s >= threshold && s >= 0 && s < static_cast<long>(link.size()))
        high = direct_sum(high, tor(sr, link[static_cast<std::size_t>(s)]));
    }
    d.high = order_polynomial(high);
    d.c = graded_at(in.c, i);

    if (in.a) {
      d.a = graded_at(*in.a, i);
      auto b = divide(d.nu, d.a);
      if (!b)
        throw Error(ErrorCode::DivisibilityViolation,
                    "a at " + deg(i) + " (" + to_string(d.a) + ") does not divide nu = " + to_string(d.nu));
      d.b = *b;
    } else {
      auto b = divide(graded_at(*in.lambda, i), d.c);
      if (!b)
        throw Error(ErrorCode::DivisibilityViolation,
                    "c at " + deg(i) + " (" + to_string(d.c) + ") does not divide lambda");
      d.b = *b;
      auto a = divide(d.nu, d.b);
      if (!a)
        throw Error(ErrorCode::DivisibilityViolation,
                    "b at " + deg(i) + " (" + to_string(d.b) + ") does not divide nu = " + to_string(d.nu));
      d.a = *a;
    }

    d.a_high = in.assume_zero_kernel ? PrimitiveRep::one() : graded_at(*in.a_high, i);
    if (!divides(d.a_high, d.a))
      throw Error(ErrorCode::DivisibilityViolation,
                  "a_high at " + deg(i) + " (" + to_string(d.a_high) + ") does not divide a = " + to_string(d.a));
    auto bh = divide(d.high, d.a_high);
    if (!bh)
      throw Error(ErrorCode::DivisibilityViolation, "a_high at " + deg(i) + " (" + to_string(d.a_high) +
                                                        ") does not divide the high part " + to_string(d.high));
    d.b_high = *bh;
    auto bl = divide(d.b, d.b_high);
    if (!bl)
      throw Error(ErrorCode::DivisibilityViolation, "b_high at " + deg(i) + " (" + to_string(d.b_high) +
                                                        ") does not divide b = " + to_string(d.b));
    d.b_low = *bl;
    d.lambda = d.b * d.c;
    out.degrees.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < out.degrees.size(); ++i) {
    auto& d = out.degrees[i];
    const PrimitiveRep& a_prev = i == 0 ? kOne : out.degrees[i - 1].a;
    const PrimitiveRep& ah_prev = i == 0 ? kOne : out.degrees[i - 1].a_high;
    d.mu = d.c * a_prev;
    d.ia = ah_prev * d.b_low * d.c;
  }
  return out;
}

PolyList superdual_polynomials(const PolyList& ia, long n) {
  const long len = std::max<long>(static_cast<long>(ia.size()), n);
  PolyList out;
  for (long i = 0; i < len; ++i) {
    long j = n - 1 - i;
    out.push_back(j >= 0 && j < static_cast<long>(ia.size()) ? involute(ia[static_cast<std::size_t>(j)])
                                                             : PrimitiveRep::one());
  }
  return out;
}

std::vector<NormalizationCheck> validate_normalization(const PolyList& ia, long n, bool super) {
  std::vector<NormalizationCheck> out;
  const PrimitiveRep tm1 = t_minus_one();
  for (long i = 0; i < static_cast<long>(ia.size()); ++i) {
    const PrimitiveRep& v = ia[static_cast<std::size_t>(i)];
    NormalizationCheck c;
    c.degree = i;
    if (!super) {
      if (i == 0) {
        c.clause = "t-1";
        c.pass = v == tm1;
      } else if (i >= n - 1) {
        c.clause = "1";
        c.pass = v.is_one();
      } else {
        c.clause = "alexander";
        c.pass = is_alexander_type(v);
      }
    } else {
      if (i == n - 1) {
        c.clause = "t-1";
        c.pass = v == tm1;
      } else if (i == 0 || i > n - 1) {
        c.clause = "1";
        c.pass = v.is_one();
      } else {
        c.clause = "alexander";
        c.pass = is_alexander_type(v);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool all_pass(const std::vector<NormalizationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const NormalizationCheck& c) { return c.pass; });
}

}  // namespace ialex
