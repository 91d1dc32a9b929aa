#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace avse {

// Dense row-major matrix. Small enough on purpose: everything in this
// project is desk scale and the hot loops index raw rows.
template <typename T>
struct BasicMat {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  BasicMat() = default;
  BasicMat(int r, int c, T fill = T{}) : rows(r), cols(c), v(static_cast<size_t>(r) * c, fill) {
    if (r < 0 || c < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  }

  T& operator()(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }

  T* row(int r) { return v.data() + static_cast<size_t>(r) * cols; }
  const T* row(int r) const { return v.data() + static_cast<size_t>(r) * cols; }

  size_t size() const { return v.size(); }
  bool same_shape(const BasicMat& o) const { return rows == o.rows && cols == o.cols; }
};

using Mat = BasicMat<double>;
using CMat = BasicMat<std::complex<double>>;

}  // namespace avse
