#include "adhdx/core/matrix.hpp"

#include <cmath>

#include "adhdx/core/error.hpp"
#include "adhdx/core/parallel.hpp"

namespace adhdx {

Mat Mat::take_rows(const std::vector<int>& idx) const {
  Mat out(static_cast<int>(idx.size()), cols);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double* src = row(idx[i]);
    double* dst = out.row(static_cast<int>(i));
    for (int c = 0; c < cols; ++c) dst[c] = src[c];
  }
  return out;
}

namespace {

void check_mm(const Mat& a, const Mat& b, int ak, int bk, const char* what) {
  if (ak != bk) {
    throw DataError("shape_mismatch", std::string(what) + ": inner dimensions " +
                                          std::to_string(ak) + " vs " + std::to_string(bk));
  }
  (void)a;
  (void)b;
}

}  // namespace

void matmul(const Mat& a, const Mat& b, Mat& out) {
  check_mm(a, b, a.cols, b.rows, "matmul");
  out = Mat(a.rows, b.cols);
  par::parallel_for(a.rows, [&](std::int64_t i) {
    double* dst = out.row(static_cast<int>(i));
    const double* ai = a.row(static_cast<int>(i));
    for (int k = 0; k < a.cols; ++k) {
      const double aik = ai[k];
      const double* bk = b.row(k);
      for (int j = 0; j < b.cols; ++j) dst[j] += aik * bk[j];
    }
  });
}

void matmul_serial(const Mat& a, const Mat& b, Mat& out) {
  check_mm(a, b, a.cols, b.rows, "matmul");
  out = Mat(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += a.at(i, k) * b.at(k, j);
      out.at(i, j) = s;
    }
  }
}

void matmul_nt(const Mat& a, const Mat& b, Mat& out) {
  check_mm(a, b, a.cols, b.cols, "matmul_nt");
  out = Mat(a.rows, b.rows);
  par::parallel_for(a.rows, [&](std::int64_t i) {
    const double* ai = a.row(static_cast<int>(i));
    double* dst = out.row(static_cast<int>(i));
    for (int j = 0; j < b.rows; ++j) {
      const double* bj = b.row(j);
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += ai[k] * bj[k];
      dst[j] = s;
    }
  });
}

void matmul_nt_serial(const Mat& a, const Mat& b, Mat& out) {
  check_mm(a, b, a.cols, b.cols, "matmul_nt");
  out = Mat(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.rows; ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += a.at(i, k) * b.at(j, k);
      out.at(i, j) = s;
    }
  }
}

void matmul_tn(const Mat& a, const Mat& b, Mat& out) {
  check_mm(a, b, a.rows, b.rows, "matmul_tn");
  out = Mat(a.cols, b.cols);
  par::parallel_for(a.cols, [&](std::int64_t i) {
    double* dst = out.row(static_cast<int>(i));
    for (int r = 0; r < a.rows; ++r) {
      const double ari = a.at(r, static_cast<int>(i));
      const double* br = b.row(r);
      for (int j = 0; j < b.cols; ++j) dst[j] += ari * br[j];
    }
  });
}

void matmul_tn_serial(const Mat& a, const Mat& b, Mat& out) {
  check_mm(a, b, a.rows, b.rows, "matmul_tn");
  out = Mat(a.cols, b.cols);
  for (int i = 0; i < a.cols; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      double s = 0.0;
      for (int r = 0; r < a.rows; ++r) s += a.at(r, i) * b.at(r, j);
      out.at(i, j) = s;
    }
  }
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat out;
  matmul(a, b, out);
  return out;
}

Vec column_means(const Mat& m) {
  Vec means(m.cols, 0.0);
  for (int r = 0; r < m.rows; ++r) {
    const double* row = m.row(r);
    for (int c = 0; c < m.cols; ++c) means[c] += row[c];
  }
  for (int c = 0; c < m.cols; ++c) means[c] /= m.rows;
  return means;
}

Vec column_stds(const Mat& m, const Vec& means) {
  Vec var(m.cols, 0.0);
  for (int r = 0; r < m.rows; ++r) {
    const double* row = m.row(r);
    for (int c = 0; c < m.cols; ++c) {
      const double d = row[c] - means[c];
      var[c] += d * d;
    }
  }
  Vec stds(m.cols, 0.0);
  for (int c = 0; c < m.cols; ++c) stds[c] = std::sqrt(var[c] / m.rows);
  return stds;
}

bool all_finite(const Mat& m) {
  for (double v : m.data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace adhdx
