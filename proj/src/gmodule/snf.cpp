// Smith normal form over Gamma by Euclidean pivoting on the span norm.

#include <algorithm>
#include <limits>

#include "ialex/gmodule.hpp"

namespace ialex {

namespace {

class Reducer {
 public:
  Reducer(const GammaMatrix& m, bool track) : a_(m), track_(track) {
    if (track_) {
      u_ = GammaMatrix::identity(m.rows());
      v_ = GammaMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!reduce_at(t)) break;
      normalize_pivot(t);
      for (std::size_t i = t + 1; i < a_.rows(); ++i) extract_row_content(i, t + 1);
    }
    SmithForm out;
    out.rank = t;
    out.free_rank = a_.cols() - t;
    for (std::size_t k = 0; k < t; ++k) out.factors.push_back(normalize(a_.at(k, k)));
    if (track_) {
      out.left = std::move(u_);
      out.right = std::move(v_);
    }
    return out;
  }

 private:
  // Moves the smallest-span entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t best_i = 0, best_j = 0, best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const LaurentPoly& e = a_.at(i, j);
        if (!e.is_zero() && e.span() < best) {
          best = e.span();
          best_i = i;
          best_j = j;
          if (best == 0) goto found;
        }
      }
    if (best == std::numeric_limits<std::size_t>::max()) return false;
  found:
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  bool reduce_at(std::size_t t) {
    if (!place_pivot(t)) return false;
    for (;;) {
      bool leftover = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_.at(i, t).is_zero()) continue;
        DivMod qr = euclidean_divide(a_.at(i, t), a_.at(t, t));
        add_row_multiple(i, t, -qr.quotient);
        if (!a_.at(i, t).is_zero()) leftover = true;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_.at(t, j).is_zero()) continue;
        DivMod qr = euclidean_divide(a_.at(t, j), a_.at(t, t));
        add_col_multiple(j, t, -qr.quotient);
        if (!a_.at(t, j).is_zero()) leftover = true;
      }
      if (leftover) {
        place_pivot(t);
        continue;
      }
      // Row and column are clear; the pivot must divide the trailing block.
      bool fixed = false;
      if (!a_.at(t, t).is_unit()) {
        for (std::size_t i = t + 1; i < a_.rows() && !fixed; ++i)
          for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            const LaurentPoly& e = a_.at(i, j);
            if (e.is_zero()) continue;
            if (!euclidean_divide(e, a_.at(t, t)).remainder.is_zero()) {
              add_row_multiple(t, i, LaurentPoly(1));
              fixed = true;
              break;
            }
          }
      }
      if (!fixed) return true;
    }
  }

  void normalize_pivot(std::size_t t) {
    const LaurentPoly& p = a_.at(t, t);
    LaurentPoly prim = normalize(p).to_laurent();
    LaurentPoly unit = *exact_divide(prim, p);
    scale_row(t, unit);
  }

  // Scale row i by a unit so its entries from column `from` on are integral
  // with content 1 and lowest exponent 0.
  void extract_row_content(std::size_t i, std::size_t from) {
    mpz_class den = 1, num = 0;
    long low = std::numeric_limits<long>::max();
    bool any = false;
    for (std::size_t j = from; j < a_.cols(); ++j) {
      const LaurentPoly& e = a_.at(i, j);
      if (e.is_zero()) continue;
      any = true;
      low = std::min(low, e.low_exponent());
      for (const auto& c : e.dense()) {
        if (c == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      }
    }
    if (!any) return;
    Rational scale(den, num);
    scale.canonicalize();
    if (scale == 1 && low == 0) return;
    scale_row(i, LaurentPoly::monomial(scale, -low));
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(i, j), a_.at(k, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(i, j), u_.at(k, j));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_.at(i, j), a_.at(i, k));
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_.at(i, j), v_.at(i, k));
  }

  // row_i += f * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (!a_.at(k, j).is_zero()) a_.at(i, j) += f * a_.at(k, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_.at(k, j).is_zero()) u_.at(i, j) += f * u_.at(k, j);
  }

  // col_j += f * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!a_.at(i, k).is_zero()) a_.at(i, j) += f * a_.at(i, k);
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (!v_.at(i, k).is_zero()) v_.at(i, j) += f * v_.at(i, k);
  }

  void scale_row(std::size_t i, const LaurentPoly& unit) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (!a_.at(i, j).is_zero()) a_.at(i, j) *= unit;
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_.at(i, j).is_zero()) u_.at(i, j) *= unit;
  }

  GammaMatrix a_;
  bool track_;
  GammaMatrix u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const GammaMatrix& m, bool with_transforms) {
  return Reducer(m, with_transforms).run();
}

}  // namespace ialex
