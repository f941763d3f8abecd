#include "adhdx/select/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "adhdx/core/error.hpp"
#include "adhdx/core/parallel.hpp"

namespace adhdx {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DataError("length_mismatch", std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw DataError("too_few_samples", "need at least 2 samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

namespace {

std::vector<Vec> split_columns(const FeatureMatrix& features) {
  std::vector<Vec> cols(features.n_features(), Vec(features.n_rows()));
  for (int r = 0; r < features.n_rows(); ++r) {
    const double* row = features.x.row(r);
    for (int c = 0; c < features.n_features(); ++c) cols[c][r] = row[c];
  }
  return cols;
}

CorrelationMatrix correlation_impl(const FeatureMatrix& features, bool parallel) {
  if (features.n_rows() < 2) throw DataError("too_few_samples", "need at least 2 rows");
  const int d = features.n_features();
  CorrelationMatrix out;
  out.names = features.feature_names;
  out.r = Mat(d, d);
  const auto cols = split_columns(features);

  // Upper triangle including the diagonal, flattened so cells are
  // independent parallel work items.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(d) * (d + 1) / 2);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) pairs.emplace_back(i, j);
  }
  auto cell = [&](std::int64_t k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    const double r = pearson(cols[i], cols[j]);
    out.r.at(i, j) = r;
    out.r.at(j, i) = r;
  };
  if (parallel) {
    par::parallel_for(static_cast<std::int64_t>(pairs.size()), cell);
  } else {
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k) cell(k);
  }
  return out;
}

}  // namespace

CorrelationMatrix correlation_matrix(const FeatureMatrix& features) {
  return correlation_impl(features, true);
}

CorrelationMatrix correlation_matrix_serial(const FeatureMatrix& features) {
  return correlation_impl(features, false);
}

json PruneReport::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["threshold"] = threshold;
  j["kept"] = kept;
  j["dropped"] = json::array();
  for (const auto& d : dropped) {
    j["dropped"].push_back({{"name", d.name}, {"partner", d.partner}, {"abs_r", d.abs_r}});
  }
  return j;
}

PruneReport prune_redundant(const CorrelationMatrix& corr, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ConfigError("invalid_threshold", fmt_double(threshold));
  }
  PruneReport report;
  report.threshold = threshold;
  const int d = static_cast<int>(corr.names.size());
  std::vector<int> retained;
  for (int j = 0; j < d; ++j) {
    bool dropped = false;
    for (int i : retained) {
      const double abs_r = std::abs(corr.r.at(i, j));
      if (abs_r > threshold) {
        report.dropped.push_back({corr.names[j], corr.names[i], abs_r});
        dropped = true;
        break;
      }
    }
    if (!dropped) {
      retained.push_back(j);
      report.kept.push_back(corr.names[j]);
    }
  }
  return report;
}

}  // namespace adhdx
