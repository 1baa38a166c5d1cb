#pragma once

// Perversities, the cone formula, and the closed-form intersection Alexander
// polynomials of the point and product singularity cases.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ialex/exactseq.hpp"
#include "ialex/gmodule.hpp"
#include "ialex/laurent.hpp"

namespace ialex {

class Perversity {
 public:
  Perversity() = default;
  // values[0] = p(2), values[1] = p(3), ... Throws InvalidPerversity.
  explicit Perversity(std::vector<long> values);

  static Perversity zero(long max_codim);
  static Perversity top(long max_codim);
  static Perversity upper_middle(long max_codim);
  static Perversity lower_middle(long max_codim);

  long max_codim() const { return static_cast<long>(values_.size()) + 1; }
  // Throws PerversityOutOfRange outside 2..max_codim.
  long at(long codim) const;
  bool is_traditional() const { return !values_.empty() && values_[0] == 0; }
  bool is_super() const { return !values_.empty() && values_[0] == 1; }
  const std::vector<long>& values() const { return values_; }

  friend bool operator==(const Perversity&, const Perversity&) = default;

 private:
  std::vector<long> values_;
};

// q(k) = k - 1 - p(k)
Perversity superdual(const Perversity& p);

// Intersection homology of the open cone on a link of dimension n - 1.
GradedModule cone_ih(const GradedModule& link, long n, const Perversity& p);

PolyList ia_locally_flat(const PolyList& lambda);

// Graded polynomials are indexed by degree; entries past the end are 1.
const PrimitiveRep& graded_at(const PolyList& seq, long i);

struct DiskKnotData {
  long n = 0;
  PolyList a, b, c;
  // Optional explicitly supplied Alexander polynomials, checked against a/b/c.
  std::optional<PolyList> lambda, nu, mu;
  // Optional nonvanishing ranges [lo, hi]; outside them the entry must be ~1.
  std::optional<std::pair<long, long>> a_range, b_range, c_range;

  PrimitiveRep lambda_at(long i) const;  // b_i c_i
  PrimitiveRep nu_at(long i) const;      // a_i b_i
  PrimitiveRep mu_at(long i) const;      // c_i a_{i-1}
  long top_degree() const;
};

// Throws InadmissibleData naming the first offending degree.
void validate_disk_knot(const DiskKnotData& data);

enum class PointBranch { Lambda, C, Mu };
std::string branch_name(PointBranch b);

struct PointResult {
  std::vector<PrimitiveRep> ia;  // degrees 0..n
  std::vector<PointBranch> branch;
  long threshold = 0;  // n - 1 - p(n)
};

// Throws SuperperversityNotAllowed, PerversityOutOfRange, InadmissibleData.
PointResult ia_point(const DiskKnotData& data, const Perversity& p);

struct ProductSingularityInput {
  long n = 0;
  long k = 0;
  Perversity perversity;
  GradedModule sigma_homology;
  GradedModule link_modules;
  PolyList c;
  std::optional<PolyList> a_high;
  // Exactly one of these fixes the a/b split of nu.
  std::optional<PolyList> a;
  std::optional<PolyList> lambda;
  bool assume_zero_kernel = false;
};

struct ProductDegree {
  PrimitiveRep nu, high, a_high, b_high, b_low, a, b, c, lambda, mu, ia;
};

struct ProductResult {
  std::vector<ProductDegree> degrees;  // 0..n
  long threshold = 0;                  // k - p(k+1)
  std::vector<PrimitiveRep> ia() const;
};

// Throws SuperperversityNotAllowed, PerversityOutOfRange, InadmissibleData,
// SchemaError, DivisibilityViolation.
ProductResult ia_product(const ProductSingularityInput& input);

PolyList superdual_polynomials(const PolyList& ia, long n);

struct NormalizationCheck {
  long degree = 0;
  std::string clause;  // "t-1", "alexander", "1"
  bool pass = false;
};

std::vector<NormalizationCheck> validate_normalization(const PolyList& ia, long n, bool super);
bool all_pass(const std::vector<NormalizationCheck>& checks);

}  // namespace ialex
