#pragma once

#include <vector>

#include "superlax/scalar.hpp"

namespace superlax {

/// Small dense matrix over an arbitrary ring element type (Scalar entries for
/// representation matrices, Operator entries for Lax-type matrices). Entry
/// multiplication order is preserved, so noncommutative entries are fine.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, const T& init)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, init) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw Error("Mat: dimension mismatch in product");
  Mat<T> out(a.rows(), b.cols(), a.at(0, 0) * b.at(0, 0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      T acc = a.at(i, 0) * b.at(0, j);
      for (int k = 1; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  return out;
}

template <typename T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("Mat: dimension mismatch in sum");
  Mat<T> out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

template <typename T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("Mat: dimension mismatch in difference");
  Mat<T> out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> out(a.cols(), a.rows(), a.at(0, 0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

template <typename T>
Mat<T> commutator(const Mat<T>& a, const Mat<T>& b) {
  return a * b - b * a;
}

template <typename T>
Mat<T> matrix_power(const Mat<T>& a, int e) {
  if (a.rows() != a.cols()) throw Error("Mat: power of a non-square matrix");
  if (e < 1) throw Error("Mat: power must be >= 1");
  Mat<T> out = a;
  for (int i = 1; i < e; ++i) out = out * a;
  return out;
}

/// Sum of all entries.
template <typename T>
T total_sum(const Mat<T>& a) {
  T acc = a.at(0, 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != 0 || j != 0) acc += a.at(i, j);
  return acc;
}

}  // namespace superlax
