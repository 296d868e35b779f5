#pragma once

// Column-compressed sparse matrices over exact scalars.

#include "okh/number.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace okh {

template <class T>
struct SparseEntry {
  int index;
  T value;
};

/// Sparse vector with strictly increasing indices and no stored zeros.
template <class T>
using SparseVec = std::vector<SparseEntry<T>>;

template <class T>
class SparseMatrix {
 public:
  using Entry = SparseEntry<T>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[i].push_back({i, T(1)});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::span<const Entry> column(int j) const { return columns_.at(j); }

  /// Replaces column j; the input may be unsorted and contain zeros or repeats.
  void set_column(int j, SparseVec<T> entries) {
    columns_.at(j) = normalize(std::move(entries), rows_);
  }

  /// Accumulates value into (row, col).
  void add(int row, int col, const T& value) {
    check(row, col);
    if (value == 0) return;
    auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, int r) { return e.index < r; });
    if (it != c.end() && it->index == row) {
      it->value += value;
      if (it->value == 0) c.erase(it);
    } else {
      c.insert(it, Entry{row, value});
    }
  }

  T at(int row, int col) const {
    check(row, col);
    const auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, int r) { return e.index < r; });
    if (it != c.end() && it->index == row) return it->value;
    return T(0);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(),
                       [](const auto& c) { return c.empty(); });
  }

  /// Locates the first nonzero entry in column-major order.
  std::optional<std::pair<int, int>> first_nonzero() const {
    for (int j = 0; j < cols_; ++j) {
      if (!columns_[j].empty()) return std::make_pair(columns_[j].front().index, j);
    }
    return std::nullopt;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int j = 0; j < cols_; ++j) {
      for (const auto& e : columns_[j]) t.columns_[e.index].push_back({j, e.value});
    }
    return t;
  }

  template <class U>
  SparseMatrix<U> cast() const {
    SparseMatrix<U> out(rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
      SparseVec<U> col;
      col.reserve(columns_[j].size());
      for (const auto& e : columns_[j]) col.push_back({e.index, U(e.value)});
      out.set_column(j, std::move(col));
    }
    return out;
  }

  SparseMatrix scaled(const T& factor) const {
    SparseMatrix out(rows_, cols_);
    if (factor == 0) return out;
    for (int j = 0; j < cols_; ++j) {
      out.columns_[j] = columns_[j];
      for (auto& e : out.columns_[j]) e.value *= factor;
    }
    return out;
  }

  /// Rows and columns picked (and reordered) by the given index lists.
  SparseMatrix submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const {
    std::vector<int> row_pos(rows_, -1);
    for (std::size_t i = 0; i < row_ids.size(); ++i) row_pos[row_ids[i]] = static_cast<int>(i);
    SparseMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (std::size_t j = 0; j < col_ids.size(); ++j) {
      SparseVec<T> col;
      for (const auto& e : columns_.at(col_ids[j])) {
        if (row_pos[e.index] >= 0) col.push_back({row_pos[e.index], e.value});
      }
      out.set_column(static_cast<int>(j), std::move(col));
    }
    return out;
  }

  /// y = A x for a sparse x.
  SparseVec<T> apply(const SparseVec<T>& x) const {
    SparseVec<T> acc;
    for (const auto& xe : x) {
      for (const auto& e : columns_.at(xe.index)) acc.push_back({e.index, e.value * xe.value});
    }
    return normalize(std::move(acc), rows_);
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<T> dense(a.rows_);
    std::vector<char> touched(a.rows_, 0);
    std::vector<int> touched_rows;
    for (int j = 0; j < b.cols_; ++j) {
      touched_rows.clear();
      for (const auto& be : b.columns_[j]) {
        for (const auto& ae : a.columns_[be.index]) {
          if (!touched[ae.index]) {
            touched[ae.index] = 1;
            touched_rows.push_back(ae.index);
            dense[ae.index] = ae.value * be.value;
          } else {
            dense[ae.index] += ae.value * be.value;
          }
        }
      }
      std::sort(touched_rows.begin(), touched_rows.end());
      auto& col = out.columns_[j];
      for (int r : touched_rows) {
        if (dense[r] != 0) col.push_back({r, dense[r]});
        touched[r] = 0;
        dense[r] = T(0);
      }
    }
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, T(1));
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, T(-1));
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int j = 0; j < a.cols_; ++j) {
      const auto& ca = a.columns_[j];
      const auto& cb = b.columns_[j];
      if (ca.size() != cb.size()) return false;
      for (std::size_t k = 0; k < ca.size(); ++k) {
        if (ca[k].index != cb[k].index || ca[k].value != cb[k].value) return false;
      }
    }
    return true;
  }

  /// Sorts, merges repeated indices and drops zeros.
  static SparseVec<T> normalize(SparseVec<T> entries, int bound) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.index < y.index; });
    SparseVec<T> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
      if (e.index < 0 || e.index >= bound) throw std::out_of_range("sparse index out of range");
      if (!out.empty() && out.back().index == e.index) {
        out.back().value += e.value;
      } else {
        out.push_back(std::move(e));
      }
    }
    std::erase_if(out, [](const Entry& e) { return e.value == 0; });
    return out;
  }

 private:
  void check(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
      throw std::out_of_range("sparse matrix index out of range");
    }
  }

  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, const T& sign) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix sum: shape mismatch");
    }
    SparseMatrix out(a.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
      SparseVec<T> col = a.columns_[j];
      for (const auto& e : b.columns_[j]) col.push_back({e.index, e.value * sign});
      out.columns_[j] = normalize(std::move(col), a.rows_);
    }
    return out;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec<T>> columns_;
};

using IntMatrix = SparseMatrix<Integer>;
using RatMatrix = SparseMatrix<Rational>;

/// Converts a rational matrix with integral entries; throws std::domain_error otherwise.
IntMatrix to_integer_matrix(const RatMatrix& m);

}  // namespace okh
