#include "reeskit/matrix.hpp"

namespace reeskit {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  entries_.assign(rows * cols, Polynomial(ring_));
}

Matrix Matrix::fromRows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw Error("matrix rows have different lengths");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::fromColumns(RingPtr ring, std::size_t rows,
                           const std::vector<std::vector<Polynomial>>& cols) {
  Matrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("matrix column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

Matrix Matrix::rowVector(RingPtr ring, const std::vector<Polynomial>& entries) {
  return fromRows(std::move(ring), {entries});
}

void Matrix::set(std::size_t r, std::size_t c, Polynomial p) {
  requireSameRing(p.ring(), ring_, "matrix entry");
  entries_[r * cols_ + c] = p.withRing(ring_);
}

std::vector<Polynomial> Matrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

std::vector<Polynomial> Matrix::row(std::size_t r) const {
  return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  return t;
}

bool Matrix::isZero() const {
  for (const auto& e : entries_)
    if (!e.isZero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  requireSameRing(a.ring_, b.ring_, "matrix product");
  if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  Matrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) {
      Polynomial acc(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a.at(r, k).isZero() && !b.at(k, c).isZero()) acc += a.at(r, k) * b.at(k, c);
      m.entries_[r * m.cols_ + c] = acc;
    }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  requireSameRing(a.ring_, b.ring_, "matrix difference");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference: shape mismatch");
  Matrix m(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] - b.entries_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return sameRing(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

Matrix Matrix::promote(const RingPtr& ring) const {
  if (ring->numVars() != ring_->numVars()) throw Error("promote: variable layout mismatch");
  Matrix m(ring, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    m.entries_[i] = entries_[i].reinterpret(ring);
  return m;
}

std::string Matrix::toString() const {
  std::string out = "matrix{";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", {" : "{";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += at(r, c).toString();
    }
    out += "}";
  }
  return out + "}";
}

}  // namespace reeskit
