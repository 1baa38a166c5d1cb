#pragma once

// Finitely generated modules over Gamma via presentation matrices.
//
// Convention: a presentation matrix has one row per relation and one column
// per generator, so coker(m) = Gamma^cols / rowspace(m).

#include <cstddef>
#include <optional>
#include <vector>

#include "ialex/laurent.hpp"

namespace ialex {

class GammaMatrix {
 public:
  GammaMatrix() = default;
  GammaMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws SchemaError on ragged input.
  static GammaMatrix from_rows(const std::vector<std::vector<LaurentPoly>>& rows, std::size_t cols = 0);
  static GammaMatrix identity(std::size_t n);
  static GammaMatrix diagonal(const std::vector<LaurentPoly>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  GammaMatrix transpose() const;
  std::vector<LaurentPoly> row(std::size_t i) const;
  bool is_zero() const;

  friend GammaMatrix operator*(const GammaMatrix& a, const GammaMatrix& b);
  friend bool operator==(const GammaMatrix& a, const GammaMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

// [a; b]
GammaMatrix stack_rows(const GammaMatrix& a, const GammaMatrix& b);
GammaMatrix block_diagonal(const std::vector<GammaMatrix>& blocks);

struct SmithForm {
  // Nonzero diagonal entries in order; each divides the next. Units appear as 1.
  std::vector<PrimitiveRep> factors;
  std::size_t rank = 0;
  // Number of generators left free in the cokernel, cols - rank.
  std::size_t free_rank = 0;
  // Present when requested: U * m * V is diagonal with the factors on it.
  std::optional<GammaMatrix> left;
  std::optional<GammaMatrix> right;
};

SmithForm smith_normal_form(const GammaMatrix& m, bool with_transforms = false);

// Canonical form: free rank plus an invariant-factor chain of nonunits.
class FgGammaModule {
 public:
  FgGammaModule() = default;
  // Canonicalizes arbitrary cyclic orders; units are dropped.
  FgGammaModule(std::size_t free_rank, std::vector<PrimitiveRep> cyclic_orders);

  static FgGammaModule zero() { return {}; }
  static FgGammaModule free(std::size_t rank) { return FgGammaModule(rank, {}); }
  static FgGammaModule cyclic(const PrimitiveRep& order) { return FgGammaModule(0, {order}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<PrimitiveRep>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion() const { return free_rank_ == 0; }
  std::size_t generator_count() const { return free_rank_ + torsion_.size(); }

  // Diagonal relations for the generators: torsion first, then free.
  GammaMatrix presentation() const;

  friend bool operator==(const FgGammaModule&, const FgGammaModule&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<PrimitiveRep> torsion_;
};

using GradedModule = std::vector<FgGammaModule>;

FgGammaModule cokernel(const GammaMatrix& m);
PrimitiveRep order_polynomial(const FgGammaModule& m);
FgGammaModule direct_sum(const FgGammaModule& a, const FgGammaModule& b);
FgGammaModule primary_component(const FgGammaModule& m, const PrimitiveRep& prime,
                                std::size_t degree_cap = kDefaultDegreeCap);
FgGammaModule conjugate(const FgGammaModule& m);
FgGammaModule tensor(const FgGammaModule& a, const FgGammaModule& b);
FgGammaModule tor(const FgGammaModule& a, const FgGammaModule& b);
FgGammaModule kunneth(const GradedModule& left, const GradedModule& right, long i);

// Orders of each torsion summand after splitting into prime powers.
std::vector<PrimitiveRep> elementary_divisors(const FgGammaModule& m, std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace ialex
