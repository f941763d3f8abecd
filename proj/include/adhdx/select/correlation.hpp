#pragma once

#include <span>
#include <string>
#include <vector>

#include "adhdx/core/matrix.hpp"
#include "adhdx/core/util.hpp"

namespace adhdx {

// Pearson r in [-1, 1]; defined as 0 when either variance is 0, so constant
// columns never register as redundant.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
  std::vector<std::string> names;
  Mat r;
};

// Pairwise Pearson over feature columns. Upper triangle is computed
// (in parallel across pairs) and mirrored.
CorrelationMatrix correlation_matrix(const FeatureMatrix& features);
CorrelationMatrix correlation_matrix_serial(const FeatureMatrix& features);

struct DroppedFeature {
  std::string name;
  std::string partner;  // retained feature it duplicated
  double abs_r = 0.0;
};

struct PruneReport {
  double threshold = 0.95;
  std::vector<std::string> kept;
  std::vector<DroppedFeature> dropped;

  json to_json() const;
};

// Greedy scan in schema order: a feature is dropped iff |r| with some
// already-retained earlier feature exceeds the threshold (strictly); the
// first such feature is recorded as partner.
PruneReport prune_redundant(const CorrelationMatrix& corr, double threshold = 0.95);

}  // namespace adhdx
