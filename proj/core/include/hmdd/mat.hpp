#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "hmdd/common.hpp"

namespace hmdd {

// Dense row-major matrix. Deliberately minimal: the pipeline only needs
// element access, iteration and a couple of reductions.
template <typename T>
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }

  T& operator()(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return d_[static_cast<size_t>(r) * cols_ + c];
  }

  T* data() { return d_.data(); }
  const T* data() const { return d_.data(); }
  auto begin() { return d_.begin(); }
  auto end() { return d_.end(); }
  auto begin() const { return d_.begin(); }
  auto end() const { return d_.end(); }

  bool same_shape(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

using MatD = Mat<double>;
using MatC = Mat<std::complex<double>>;
using MatU8 = Mat<uint8_t>;

template <typename T>
std::pair<T, T> minmax_of(const Mat<T>& m) {
  auto [lo, hi] = std::minmax_element(m.begin(), m.end());
  return {*lo, *hi};
}

template <typename T>
bool all_finite(const Mat<T>& m) {
  for (const auto& v : m)
    if (!std::isfinite(v)) return false;
  return true;
}

inline bool all_finite(const MatC& m) {
  for (const auto& v : m)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

// Bilinear resampling with corner alignment. Row/col counts must be >= 1;
// a singleton source axis degenerates to replication.
MatD resize_bilinear(const MatD& src, int rows, int cols);

// Min-max scale to [0, 255] with round-half-up. Constant input maps to 0.
MatU8 to_u8_minmax(const MatD& m);

}  // namespace hmdd
