#include "adhdx/data/table.hpp"

#include <algorithm>

#include "adhdx/core/error.hpp"
#include "adhdx/core/util.hpp"

namespace adhdx {

Schema adhd200_schema() {
  auto num = [](const char* n) { return ColumnSchema{n, ColumnKind::Numeric, true}; };
  auto cat = [](const char* n) { return ColumnSchema{n, ColumnKind::Categorical, true}; };
  return {
      num("ScanDir ID"),    cat("Site"),           num("Gender"),
      num("Age"),           num("Handedness"),     num("DX"),
      cat("Secondary Dx"),  num("ADHD Measure"),   num("ADHD Index"),
      num("Inattentive"),   num("Hyper/Impulsive"), num("IQ Measure"),
      num("Verbal IQ"),     num("Performance IQ"), num("Full2 IQ"),
      num("Full4 IQ"),      num("Med Status"),     num("QC_Rest_1"),
      num("QC_Rest_2"),     num("QC_Rest_3"),      num("QC_Rest_4"),
      num("QC_Anatomical_1"), num("QC_Anatomical_2"),
  };
}

int DataTable::col_index(const std::string& name) const {
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

const Column& DataTable::col(const std::string& name) const {
  int i = col_index(name);
  if (i < 0) throw DataError("unknown_column", name);
  return cols[i];
}

Column& DataTable::col(const std::string& name) {
  int i = col_index(name);
  if (i < 0) throw DataError("unknown_column", name);
  return cols[i];
}

bool DataTable::has_missing() const {
  for (const auto& c : cols) {
    for (auto m : c.missing) {
      if (m) return true;
    }
  }
  return false;
}

namespace {

// One CSV record, RFC-4180 style quoting, tolerant of trailing \r.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

bool is_missing_token(const std::string& token, const CsvOptions& options) {
  const std::string t = trim(token);
  return std::find(options.missing_tokens.begin(), options.missing_tokens.end(), t) !=
         options.missing_tokens.end();
}

}  // namespace

DataTable parse_csv(const std::string& text, const Schema& schema, const CsvOptions& options) {
  std::vector<std::string> lines;
  {
    std::string cur;
    bool quoted = false;
    for (char ch : text) {
      if (ch == '"') quoted = !quoted;
      if (ch == '\n' && !quoted) {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!trim(cur).empty()) lines.push_back(cur);
  }
  if (lines.empty()) throw DataError("empty_table", "no header row");

  const auto header = split_csv_line(lines[0]);
  std::vector<int> header_to_schema(header.size(), -1);
  std::vector<bool> seen(schema.size(), false);
  std::vector<std::string> unknown;
  for (std::size_t h = 0; h < header.size(); ++h) {
    const std::string name = trim(header[h]);
    int idx = -1;
    for (std::size_t s = 0; s < schema.size(); ++s) {
      if (schema[s].name == name) {
        idx = static_cast<int>(s);
        break;
      }
    }
    if (idx < 0) {
      unknown.push_back(name);
    } else {
      header_to_schema[h] = idx;
      seen[idx] = true;
    }
  }
  std::vector<std::string> absent;
  for (std::size_t s = 0; s < schema.size(); ++s) {
    if (!seen[s]) absent.push_back(schema[s].name);
  }
  if (!unknown.empty() || !absent.empty()) {
    throw DataError("header_mismatch", "unknown columns [" + join(unknown, ", ") +
                                           "], absent columns [" + join(absent, ", ") + "]");
  }

  DataTable table;
  table.schema = schema;
  table.cols.resize(schema.size());
  const int n_rows = static_cast<int>(lines.size()) - 1;
  if (n_rows == 0) throw DataError("empty_table", "0 data rows");
  for (std::size_t s = 0; s < schema.size(); ++s) {
    auto& col = table.cols[s];
    col.missing.assign(n_rows, 0);
    if (schema[s].kind == ColumnKind::Numeric) col.num.assign(n_rows, 0.0);
    else col.cat.assign(n_rows, std::string());
  }
  table.n_rows = n_rows;

  for (int r = 0; r < n_rows; ++r) {
    const auto fields = split_csv_line(lines[r + 1]);
    if (fields.size() != header.size()) {
      throw DataError("ragged_row", "row " + std::to_string(r + 1) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(header.size()));
    }
    for (std::size_t h = 0; h < fields.size(); ++h) {
      const int s = header_to_schema[h];
      auto& col = table.cols[s];
      const std::string& raw = fields[h];
      if (is_missing_token(raw, options)) {
        col.missing[r] = 1;
        continue;
      }
      if (schema[s].kind == ColumnKind::Numeric) {
        auto value = parse_double(raw);
        if (!value) {
          col.missing[r] = 1;  // unparseable numeric cell -> missing
        } else {
          col.num[r] = *value;
        }
      } else {
        col.cat[r] = trim(raw);
      }
    }
  }
  return table;
}

DataTable load_csv(const std::filesystem::path& path, const Schema& schema,
                   const CsvOptions& options) {
  if (!std::filesystem::exists(path)) {
    throw DataError("file_not_found", path.string());
  }
  return parse_csv(read_text_file(path), schema, options);
}

std::string to_csv(const DataTable& table) {
  std::string out;
  for (std::size_t s = 0; s < table.schema.size(); ++s) {
    if (s) out += ',';
    out += csv_escape(table.schema[s].name);
  }
  out += '\n';
  for (int r = 0; r < table.n_rows; ++r) {
    for (std::size_t s = 0; s < table.schema.size(); ++s) {
      if (s) out += ',';
      const auto& col = table.cols[s];
      if (col.missing[r]) continue;  // missing -> empty cell
      if (table.schema[s].kind == ColumnKind::Numeric) {
        out += fmt_double(col.num[r]);
      } else {
        out += csv_escape(col.cat[r]);
      }
    }
    out += '\n';
  }
  return out;
}

void save_csv(const DataTable& table, const std::filesystem::path& path) {
  write_text_file(path, to_csv(table));
}

DataTable merge_tables(const std::vector<DataTable>& parts) {
  if (parts.empty()) throw DataError("empty_table", "merge of zero tables");
  const Schema& schema = parts[0].schema;
  for (const auto& p : parts) {
    if (p.schema.size() != schema.size()) {
      throw DataError("schema_mismatch", "column count differs");
    }
    for (std::size_t s = 0; s < schema.size(); ++s) {
      if (p.schema[s].name != schema[s].name || p.schema[s].kind != schema[s].kind) {
        throw DataError("schema_mismatch", "column " + std::to_string(s) + " differs");
      }
    }
  }
  DataTable out;
  out.schema = schema;
  out.cols.resize(schema.size());
  for (const auto& p : parts) out.n_rows += p.n_rows;
  for (std::size_t s = 0; s < schema.size(); ++s) {
    auto& dst = out.cols[s];
    dst.missing.reserve(out.n_rows);
    for (const auto& p : parts) {
      const auto& src = p.cols[s];
      dst.missing.insert(dst.missing.end(), src.missing.begin(), src.missing.end());
      if (schema[s].kind == ColumnKind::Numeric) {
        dst.num.insert(dst.num.end(), src.num.begin(), src.num.end());
      } else {
        dst.cat.insert(dst.cat.end(), src.cat.begin(), src.cat.end());
      }
    }
  }
  return out;
}

}  // namespace adhdx
