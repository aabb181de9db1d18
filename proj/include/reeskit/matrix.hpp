#pragma once

#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

/// Matrix presenting a map of free modules R^cols -> R^rows (columns are the
/// images of the source basis).
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix fromRows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static Matrix fromColumns(RingPtr ring, std::size_t rows,
                            const std::vector<std::vector<Polynomial>>& cols);
  static Matrix identity(RingPtr ring, std::size_t n);
  static Matrix rowVector(RingPtr ring, const std::vector<Polynomial>& entries);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial p);

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> row(std::size_t r) const;
  std::vector<Polynomial> entries() const { return entries_; }

  Matrix transpose() const;
  bool isZero() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Same entries in another ring with the same variable layout (entries are
  /// re-normalised there).
  Matrix promote(const RingPtr& ring) const;

  std::string toString() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace reeskit
