#pragma once

/// Dense exact matrices over a cyclotomic field, plus the sparse elimination
/// used for commutant computations.

#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace skeinrep {

class Matrix {
 public:
  Matrix(const CycField& f, int rows, int cols)
      : field_(&f), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              CycNum::zero(f)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Matrix identity(const CycField& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycNum::one(f);
    return m;
  }

  const CycField& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycNum& at(int i, int j) {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j)];
  }
  const CycNum& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j)];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.field(), a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const CycNum& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const CycNum& bkj = b.at(k, j);
          if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const CycNum& s) {
    Matrix out = a;
    for (auto& v : out.data_) v *= s;
    return out;
  }
  friend Matrix operator*(const CycNum& s, const Matrix& a) { return a * s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  /// Entry-wise Galois conjugate of the transpose.
  Matrix conj_transpose() const {
    Matrix out(field(), cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = conj(at(i, j));
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  const CycField* field_;
  int rows_, cols_;
  std::vector<CycNum> data_;
};

/// Horner evaluation of a polynomial at a square matrix.
inline Matrix eval_at_matrix(const Polynomial& p, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of a non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    const CycNum c = p.coeff(k);
    if (!c.is_zero()) {
      for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += c;
    }
  }
  return acc;
}

/// Rank of a sparse exact linear system given as rows of (column, value)
/// pairs.  Rows with fewest entries are eliminated first, which dispatches
/// the near-diagonal constraints cheaply before any fill-in appears.
inline long sparse_rank(std::vector<std::vector<std::pair<int, CycNum>>> rows) {
  auto prune = [](std::vector<std::pair<int, CycNum>>& row) {
    row.erase(std::remove_if(row.begin(), row.end(),
                             [](const auto& e) { return e.second.is_zero(); }),
              row.end());
  };
  for (auto& row : rows) prune(row);

  long rank = 0;
  while (true) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
    }
    if (best == rows.size()) break;
    ++rank;
    auto pivot_row = std::move(rows[best]);
    rows[best] = {};
    const int pcol = pivot_row.front().first;
    const CycNum pinv = pivot_row.front().second.inv();
    for (auto& [col, val] : pivot_row) val *= pinv;
    for (auto& row : rows) {
      if (row.empty()) continue;
      const CycNum* hit = nullptr;
      for (const auto& [col, val] : row) {
        if (col == pcol) {
          hit = &val;
          break;
        }
      }
      if (!hit) continue;
      const CycNum factor = *hit;
      // row -= factor * pivot_row
      std::vector<std::pair<int, CycNum>> merged;
      merged.reserve(row.size() + pivot_row.size());
      std::size_t a = 0, b = 0;
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      auto sorted_pivot = pivot_row;
      std::sort(sorted_pivot.begin(), sorted_pivot.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      while (a < row.size() || b < sorted_pivot.size()) {
        if (b == sorted_pivot.size() ||
            (a < row.size() && row[a].first < sorted_pivot[b].first)) {
          merged.push_back(row[a++]);
        } else if (a == row.size() || sorted_pivot[b].first < row[a].first) {
          merged.emplace_back(sorted_pivot[b].first, -(factor * sorted_pivot[b].second));
          ++b;
        } else {
          CycNum v = row[a].second - factor * sorted_pivot[b].second;
          if (!v.is_zero()) merged.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
      prune(row);
    }
  }
  return rank;
}

}  // namespace skeinrep
