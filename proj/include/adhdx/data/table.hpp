#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "adhdx/core/matrix.hpp"

namespace adhdx {

enum class ColumnKind { Numeric, Categorical };

struct ColumnSchema {
  std::string name;
  ColumnKind kind = ColumnKind::Numeric;
  bool nullable = true;
};

using Schema = std::vector<ColumnSchema>;

// The 23 phenotypic columns of the ADHD-200 table, in file order.
// Site and Secondary Dx are text; everything else parses as numeric.
Schema adhd200_schema();

// Column store: numeric values in `num`, categorical text in `cat`
// (whichever matches the schema kind), plus a per-cell missing flag.
// Cells flagged missing hold a placeholder and must not be consulted.
struct Column {
  std::vector<double> num;
  std::vector<std::string> cat;
  std::vector<std::uint8_t> missing;
};

struct DataTable {
  Schema schema;
  std::vector<Column> cols;
  int n_rows = 0;

  int col_index(const std::string& name) const;
  const Column& col(const std::string& name) const;
  Column& col(const std::string& name);
  bool has_missing() const;
};

struct CsvOptions {
  std::vector<std::string> missing_tokens = {"", "N/A", "NaN", "-999"};
};

// Header-matched CSV load. Unparseable numeric cells and missing tokens
// become missing cells; unknown or absent header names are an error.
DataTable load_csv(const std::filesystem::path& path, const Schema& schema,
                   const CsvOptions& options = {});

// Parse from an in-memory string (same contract as load_csv).
DataTable parse_csv(const std::string& text, const Schema& schema,
                    const CsvOptions& options = {});

std::string to_csv(const DataTable& table);
void save_csv(const DataTable& table, const std::filesystem::path& path);

// Row-concatenation in argument order; schemas must match exactly.
DataTable merge_tables(const std::vector<DataTable>& parts);

}  // namespace adhdx
