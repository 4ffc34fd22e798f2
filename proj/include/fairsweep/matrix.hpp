#pragma once

#include <cstddef>
#include <vector>

namespace fairsweep {

// Dense row-major double matrix. Just enough linear algebra for the trainer;
// hot loops live at the call sites so they can fuse activation and bias work.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

  void fill(double v) { data.assign(data.size(), v); }
};

}  // namespace fairsweep
