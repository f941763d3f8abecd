#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adhdx/core/matrix.hpp"
#include "adhdx/core/util.hpp"
#include "adhdx/data/table.hpp"

namespace adhdx {

// Fitted preprocessing parameters. Operations below run in fit mode when the
// relevant entry is absent and in apply mode when it is present, so a stored
// state replayed on the data it was fitted on reproduces the transform
// exactly.
struct PreprocessState {
  std::map<std::string, double> impute_means;
  std::map<std::string, std::map<std::string, int>> category_maps;
  std::map<std::string, double> scaler_means;
  std::map<std::string, double> scaler_stds;

  json to_json() const;
  static PreprocessState from_json(const json& j);
};

// Missing numeric cells -> column mean over observed cells; missing
// categorical cells -> the "MISSING" sentinel category.
DataTable impute_mean(const DataTable& table, PreprocessState& state);

// Categorical columns -> integer codes, consecutive from 0 in lexicographic
// category order. Columns come out numeric. Stored maps are reused; unseen
// text under a stored map is an error.
DataTable encode_categoricals(const DataTable& table, PreprocessState& state);

enum class Task { Binary, Multiclass };

std::string task_name(Task t);
Task task_from_name(const std::string& name);

struct LabelVector {
  std::vector<int> values;
  Task task = Task::Binary;
  std::vector<std::string> class_names;

  int n_classes() const { return static_cast<int>(class_names.size()); }
  std::vector<int> class_counts() const;
  LabelVector take(const std::vector<int>& idx) const;
};

// DX -> labels. Multiclass keeps DX verbatim; binary collapses {1,2,3} to 1.
LabelVector make_labels(const DataTable& table, Task task);

// All numeric columns except DX and `exclude`, in schema order.
// Requires a fully imputed and encoded table.
FeatureMatrix to_features(const DataTable& table,
                          const std::vector<std::string>& exclude = {});

struct SplitIndices {
  std::vector<int> train;
  std::vector<int> test;
};

// Seeded uniform permutation; first floor(n * train_frac) rows train.
SplitIndices split_indices(int n_rows, double train_frac, std::uint64_t seed);

// Fit per-feature mean / population std on `train` (constant features get
// std 0 and map to 0), then transform train and every `apply_to` matrix.
// Returns transformed train followed by the transformed apply_to matrices.
std::vector<FeatureMatrix> standardize(const FeatureMatrix& train,
                                       const std::vector<FeatureMatrix>& apply_to,
                                       PreprocessState& state);

FeatureMatrix apply_scaler(const FeatureMatrix& m, const PreprocessState& state);

FeatureMatrix select_features(const FeatureMatrix& m,
                              const std::vector<std::string>& keep);

}  // namespace adhdx
