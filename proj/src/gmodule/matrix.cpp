#include <stdexcept>

#include "ialex/error.hpp"
#include "ialex/gmodule.hpp"

namespace ialex {

GammaMatrix GammaMatrix::from_rows(const std::vector<std::vector<LaurentPoly>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  GammaMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::SchemaError, "matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                              " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

GammaMatrix GammaMatrix::identity(std::size_t n) {
  GammaMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

GammaMatrix GammaMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  GammaMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

GammaMatrix GammaMatrix::transpose() const {
  GammaMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<LaurentPoly> GammaMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
}

bool GammaMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

GammaMatrix operator*(const GammaMatrix& a, const GammaMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not compose");
  GammaMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

GammaMatrix stack_rows(const GammaMatrix& a, const GammaMatrix& b) {
  if (a.rows() > 0 && b.rows() > 0 && a.cols() != b.cols()) throw std::invalid_argument("column counts differ");
  std::size_t cols = a.rows() > 0 ? a.cols() : b.cols();
  if (a.rows() == 0 && b.rows() == 0) cols = std::max(a.cols(), b.cols());
  GammaMatrix out(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

GammaMatrix block_diagonal(const std::vector<GammaMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  GammaMatrix out(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(r0 + i, c0 + j) = b.at(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace ialex
