#include "adhdx/data/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "adhdx/core/error.hpp"
#include "adhdx/core/rng.hpp"

namespace adhdx {

json PreprocessState::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["impute_means"] = json::object();
  for (const auto& [name, mean] : impute_means) j["impute_means"][name] = mean;
  j["category_maps"] = json::object();
  for (const auto& [name, map] : category_maps) {
    json m = json::object();
    for (const auto& [cat, code] : map) m[cat] = code;
    j["category_maps"][name] = m;
  }
  j["scaler_means"] = json::object();
  for (const auto& [name, mean] : scaler_means) j["scaler_means"][name] = mean;
  j["scaler_stds"] = json::object();
  for (const auto& [name, std_] : scaler_stds) j["scaler_stds"][name] = std_;
  return j;
}

PreprocessState PreprocessState::from_json(const json& j) {
  PreprocessState s;
  for (auto it = j.at("impute_means").begin(); it != j.at("impute_means").end(); ++it) {
    s.impute_means[it.key()] = it.value().get<double>();
  }
  for (auto it = j.at("category_maps").begin(); it != j.at("category_maps").end(); ++it) {
    std::map<std::string, int> m;
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
      m[jt.key()] = jt.value().get<int>();
    }
    s.category_maps[it.key()] = m;
  }
  for (auto it = j.at("scaler_means").begin(); it != j.at("scaler_means").end(); ++it) {
    s.scaler_means[it.key()] = it.value().get<double>();
  }
  for (auto it = j.at("scaler_stds").begin(); it != j.at("scaler_stds").end(); ++it) {
    s.scaler_stds[it.key()] = it.value().get<double>();
  }
  return s;
}

DataTable impute_mean(const DataTable& table, PreprocessState& state) {
  DataTable out = table;
  for (std::size_t s = 0; s < out.schema.size(); ++s) {
    auto& col = out.cols[s];
    const std::string& name = out.schema[s].name;
    if (out.schema[s].kind == ColumnKind::Numeric) {
      double mean = 0.0;
      auto stored = state.impute_means.find(name);
      if (stored != state.impute_means.end()) {
        mean = stored->second;
      } else {
        double sum = 0.0;
        int n = 0;
        for (int r = 0; r < out.n_rows; ++r) {
          if (!col.missing[r]) {
            sum += col.num[r];
            ++n;
          }
        }
        if (n == 0) {
          throw DataError("all_missing_column", "numeric column '" + name +
                                                    "' has no observed values");
        }
        mean = sum / n;
        state.impute_means[name] = mean;
      }
      for (int r = 0; r < out.n_rows; ++r) {
        if (col.missing[r]) {
          col.num[r] = mean;
          col.missing[r] = 0;
        }
      }
    } else {
      for (int r = 0; r < out.n_rows; ++r) {
        if (col.missing[r]) {
          col.cat[r] = "MISSING";
          col.missing[r] = 0;
        }
      }
    }
  }
  return out;
}

DataTable encode_categoricals(const DataTable& table, PreprocessState& state) {
  DataTable out;
  out.schema = table.schema;
  out.cols = table.cols;
  out.n_rows = table.n_rows;
  for (std::size_t s = 0; s < out.schema.size(); ++s) {
    if (out.schema[s].kind != ColumnKind::Categorical) continue;
    const std::string& name = out.schema[s].name;
    auto& col = out.cols[s];
    for (int r = 0; r < out.n_rows; ++r) {
      if (col.missing[r]) {
        throw DataError("missing_categorical", "column '" + name +
                                                   "' still has missing cells; impute first");
      }
    }
    auto stored = state.category_maps.find(name);
    if (stored == state.category_maps.end()) {
      std::set<std::string> cats(col.cat.begin(), col.cat.end());
      std::map<std::string, int> map;
      int code = 0;
      for (const auto& c : cats) map[c] = code++;  // lexicographic order
      stored = state.category_maps.emplace(name, std::move(map)).first;
    }
    const auto& map = stored->second;
    col.num.assign(out.n_rows, 0.0);
    for (int r = 0; r < out.n_rows; ++r) {
      auto it = map.find(col.cat[r]);
      if (it == map.end()) {
        throw DataError("unknown_category",
                        "column '" + name + "' value '" + col.cat[r] + "'");
      }
      col.num[r] = it->second;
    }
    col.cat.clear();
    out.schema[s].kind = ColumnKind::Numeric;
  }
  return out;
}

std::string task_name(Task t) { return t == Task::Binary ? "binary" : "multiclass"; }

Task task_from_name(const std::string& name) {
  if (name == "binary") return Task::Binary;
  if (name == "multiclass") return Task::Multiclass;
  throw ConfigError("unknown_task", name);
}

std::vector<int> LabelVector::class_counts() const {
  std::vector<int> counts(class_names.size(), 0);
  for (int v : values) counts[v]++;
  return counts;
}

LabelVector LabelVector::take(const std::vector<int>& idx) const {
  LabelVector out;
  out.task = task;
  out.class_names = class_names;
  out.values.reserve(idx.size());
  for (int i : idx) out.values.push_back(values[i]);
  return out;
}

LabelVector make_labels(const DataTable& table, Task task) {
  int dx = table.col_index("DX");
  if (dx < 0) throw DataError("unknown_column", "DX");
  const auto& col = table.cols[dx];
  LabelVector labels;
  labels.task = task;
  if (task == Task::Binary) {
    labels.class_names = {"TDC", "ADHD"};
  } else {
    labels.class_names = {"TDC", "ADHD-Combined", "ADHD-Hyperactive/Impulsive",
                          "ADHD-Inattentive"};
  }
  labels.values.reserve(table.n_rows);
  for (int r = 0; r < table.n_rows; ++r) {
    if (col.missing[r]) throw DataError("invalid_dx_value", "missing DX at row " + std::to_string(r));
    const double v = col.num[r];
    if (v != 0.0 && v != 1.0 && v != 2.0 && v != 3.0) {
      throw DataError("invalid_dx_value",
                      "row " + std::to_string(r) + " DX=" + fmt_double(v));
    }
    const int cls = static_cast<int>(v);
    labels.values.push_back(task == Task::Binary ? (cls > 0 ? 1 : 0) : cls);
  }
  return labels;
}

FeatureMatrix to_features(const DataTable& table, const std::vector<std::string>& exclude) {
  FeatureMatrix fm;
  std::vector<int> picked;
  for (std::size_t s = 0; s < table.schema.size(); ++s) {
    const auto& cs = table.schema[s];
    if (cs.name == "DX") continue;
    if (std::find(exclude.begin(), exclude.end(), cs.name) != exclude.end()) continue;
    if (cs.kind != ColumnKind::Numeric) {
      throw DataError("unencoded_column", "column '" + cs.name + "' is not numeric");
    }
    for (int r = 0; r < table.n_rows; ++r) {
      if (table.cols[s].missing[r]) {
        throw DataError("missing_cell", "column '" + cs.name + "' row " + std::to_string(r));
      }
    }
    picked.push_back(static_cast<int>(s));
    fm.feature_names.push_back(cs.name);
  }
  fm.x = Mat(table.n_rows, static_cast<int>(picked.size()));
  for (int r = 0; r < table.n_rows; ++r) {
    double* dst = fm.x.row(r);
    for (std::size_t j = 0; j < picked.size(); ++j) {
      dst[j] = table.cols[picked[j]].num[r];
    }
  }
  return fm;
}

SplitIndices split_indices(int n_rows, double train_frac, std::uint64_t seed) {
  if (!(train_frac > 0.0 && train_frac < 1.0)) {
    throw ConfigError("invalid_train_frac", fmt_double(train_frac));
  }
  std::vector<int> perm(n_rows);
  for (int i = 0; i < n_rows; ++i) perm[i] = i;
  Rng rng(derive_seed(seed, 0x53504c49 /* split stream */));
  rng.shuffle(perm);
  const int n_train = static_cast<int>(std::floor(n_rows * train_frac));
  SplitIndices out;
  out.train.assign(perm.begin(), perm.begin() + n_train);
  out.test.assign(perm.begin() + n_train, perm.end());
  if (out.train.empty() || out.test.empty()) {
    throw DataError("degenerate_split", "train=" + std::to_string(out.train.size()) +
                                            " test=" + std::to_string(out.test.size()));
  }
  return out;
}

std::vector<FeatureMatrix> standardize(const FeatureMatrix& train,
                                       const std::vector<FeatureMatrix>& apply_to,
                                       PreprocessState& state) {
  if (train.n_rows() == 0) throw DataError("empty_table", "standardize on empty train set");
  const Vec means = column_means(train.x);
  const Vec stds = column_stds(train.x, means);
  for (int c = 0; c < train.n_features(); ++c) {
    const std::string& name = train.feature_names[c];
    if (!state.scaler_means.count(name)) {
      state.scaler_means[name] = means[c];
      state.scaler_stds[name] = stds[c];
    }
  }
  std::vector<FeatureMatrix> out;
  out.push_back(apply_scaler(train, state));
  for (const auto& m : apply_to) out.push_back(apply_scaler(m, state));
  return out;
}

FeatureMatrix apply_scaler(const FeatureMatrix& m, const PreprocessState& state) {
  FeatureMatrix out = m;
  for (int c = 0; c < m.n_features(); ++c) {
    const std::string& name = m.feature_names[c];
    auto mean_it = state.scaler_means.find(name);
    auto std_it = state.scaler_stds.find(name);
    if (mean_it == state.scaler_means.end() || std_it == state.scaler_stds.end()) {
      throw DataError("unfitted_scaler", "feature '" + name + "'");
    }
    const double mean = mean_it->second;
    const double sd = std_it->second;
    for (int r = 0; r < m.n_rows(); ++r) {
      // std 0 marks a constant column; it maps to 0.
      out.x.at(r, c) = sd == 0.0 ? 0.0 : (m.x.at(r, c) - mean) / sd;
    }
  }
  return out;
}

FeatureMatrix select_features(const FeatureMatrix& m, const std::vector<std::string>& keep) {
  std::vector<int> idx;
  FeatureMatrix out;
  for (const auto& name : keep) {
    auto it = std::find(m.feature_names.begin(), m.feature_names.end(), name);
    if (it == m.feature_names.end()) throw DataError("unknown_column", name);
    idx.push_back(static_cast<int>(it - m.feature_names.begin()));
    out.feature_names.push_back(name);
  }
  out.x = Mat(m.n_rows(), static_cast<int>(idx.size()));
  for (int r = 0; r < m.n_rows(); ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      out.x.at(r, static_cast<int>(j)) = m.x.at(r, idx[j]);
    }
  }
  return out;
}

}  // namespace adhdx
