#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace adhdx {

using Vec = std::vector<double>;

// Dense row-major matrix. The workhorse type for feature tables, network
// activations and probability outputs.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  Mat take_rows(const std::vector<int>& idx) const;
};

// out = a * b. OpenMP over output rows; per-cell accumulation order matches
// the serial reference exactly.
void matmul(const Mat& a, const Mat& b, Mat& out);
// out = a * b^T  (b given as [n x k], k matching a's cols)
void matmul_nt(const Mat& a, const Mat& b, Mat& out);
// out = a^T * b  (a is [r x m], b is [r x n], out [m x n])
void matmul_tn(const Mat& a, const Mat& b, Mat& out);

// Naive serial references kept for kernel equivalence tests and the bench.
void matmul_serial(const Mat& a, const Mat& b, Mat& out);
void matmul_nt_serial(const Mat& a, const Mat& b, Mat& out);
void matmul_tn_serial(const Mat& a, const Mat& b, Mat& out);

Mat matmul(const Mat& a, const Mat& b);

// Column mean / population std (divisor n) over rows.
Vec column_means(const Mat& m);
Vec column_stds(const Mat& m, const Vec& means);

bool all_finite(const Mat& m);
bool all_finite(const Vec& v);

struct FeatureMatrix {
  Mat x;
  std::vector<std::string> feature_names;

  int n_rows() const { return x.rows; }
  int n_features() const { return x.cols; }
};

}  // namespace adhdx
