#include "adhdx/data/synth.hpp"

#include <algorithm>
#include <cmath>

#include "adhdx/core/error.hpp"
#include "adhdx/core/rng.hpp"

namespace adhdx {

namespace {

const char* kSites[] = {"Brown", "KKI", "NYU", "NeuroIMAGE",
                        "OHSU", "Peking", "Pittsburgh", "WashU"};
const char* kSecondaryDx[] = {"ODD", "Anxiety", "Learning", "Mood"};

// Class-conditional means for the three rating scales (TDC, Combined,
// Hyperactive/Impulsive, Inattentive). Combined is high on both scales,
// the subtype classes on theirs.
constexpr double kIndexMean[4] = {35.0, 65.0, 58.0, 55.0};
constexpr double kIndexStd = 7.0;
constexpr double kInattMean[4] = {40.0, 62.0, 45.0, 68.0};
constexpr double kInattStd = 6.0;
constexpr double kHyperMean[4] = {40.0, 63.0, 69.0, 44.0};
constexpr double kHyperStd = 6.0;

constexpr double kMissingRate = 0.02;

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

std::pair<DataTable, LabelVector> synth_generate(const std::array<int, 4>& n_per_class,
                                                 std::uint64_t seed) {
  for (int c = 0; c < 4; ++c) {
    if (n_per_class[c] < 1) {
      throw ConfigError("invalid_class_count",
                        "class " + std::to_string(c) + " count must be >= 1");
    }
  }
  const int n = n_per_class[0] + n_per_class[1] + n_per_class[2] + n_per_class[3];

  std::vector<int> cls;
  cls.reserve(n);
  for (int c = 0; c < 4; ++c) cls.insert(cls.end(), n_per_class[c], c);
  Rng order_rng(derive_seed(seed, 1));
  order_rng.shuffle(cls);

  DataTable table;
  table.schema = adhd200_schema();
  table.cols.resize(table.schema.size());
  table.n_rows = n;
  for (std::size_t s = 0; s < table.schema.size(); ++s) {
    auto& col = table.cols[s];
    col.missing.assign(n, 0);
    if (table.schema[s].kind == ColumnKind::Numeric) col.num.assign(n, 0.0);
    else col.cat.assign(n, std::string());
  }

  Rng rng(derive_seed(seed, 2));
  for (int r = 0; r < n; ++r) {
    const int c = cls[r];
    for (std::size_t s = 0; s < table.schema.size(); ++s) {
      const std::string& name = table.schema[s].name;
      auto& col = table.cols[s];
      if (name == "ScanDir ID") {
        col.num[r] = 5000000 + r;
      } else if (name == "Site") {
        col.cat[r] = kSites[rng.below(8)];
      } else if (name == "Gender") {
        col.num[r] = static_cast<double>(rng.below(2));
      } else if (name == "Age") {
        col.num[r] = round2(std::clamp(rng.normal(11.5, 3.0), 7.0, 21.0));
      } else if (name == "Handedness") {
        col.num[r] = rng.uniform() < 0.9 ? 1.0 : 0.0;
      } else if (name == "DX") {
        col.num[r] = c;
      } else if (name == "Secondary Dx") {
        col.cat[r] = rng.uniform() < 0.85 ? "None" : kSecondaryDx[rng.below(4)];
      } else if (name == "ADHD Measure") {
        col.num[r] = static_cast<double>(1 + rng.below(3));
      } else if (name == "ADHD Index") {
        col.num[r] = round2(rng.normal(kIndexMean[c], kIndexStd));
      } else if (name == "Inattentive") {
        col.num[r] = round2(rng.normal(kInattMean[c], kInattStd));
      } else if (name == "Hyper/Impulsive") {
        col.num[r] = round2(rng.normal(kHyperMean[c], kHyperStd));
      } else if (name == "IQ Measure") {
        col.num[r] = static_cast<double>(1 + rng.below(3));
      } else if (name == "Verbal IQ") {
        col.num[r] = round2(rng.normal(105.0, 12.0));
      } else if (name == "Performance IQ") {
        col.num[r] = round2(rng.normal(103.0, 13.0));
      } else if (name == "Full2 IQ") {
        col.num[r] = round2(rng.normal(104.0, 12.0));
      } else if (name == "Full4 IQ") {
        col.num[r] = round2(rng.normal(104.0, 12.0));
      } else if (name == "Med Status") {
        col.num[r] = static_cast<double>(rng.below(3));
      } else {
        // QC_Rest_* / QC_Anatomical_*: pass flags, mostly 1.
        col.num[r] = rng.uniform() < 0.9 ? 1.0 : 0.0;
      }
    }
  }

  Rng miss_rng(derive_seed(seed, 3));
  for (std::size_t s = 0; s < table.schema.size(); ++s) {
    if (table.schema[s].name == "DX") continue;
    auto& col = table.cols[s];
    for (int r = 0; r < n; ++r) {
      if (miss_rng.uniform() < kMissingRate) col.missing[r] = 1;
    }
  }

  LabelVector labels;
  labels.task = Task::Multiclass;
  labels.class_names = {"TDC", "ADHD-Combined", "ADHD-Hyperactive/Impulsive",
                        "ADHD-Inattentive"};
  labels.values = cls;
  return {std::move(table), std::move(labels)};
}

}  // namespace adhdx
