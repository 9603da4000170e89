#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sandwich/dataset.hpp"

namespace sandwich {

/// A parsed CSV table: one header row, then numeric data rows.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  ///< row-major, rows[i].size() == columns.size()
};

/// Reads a comma-separated table. The header row is required; every data
/// cell must parse as a finite decimal number. Errors cite 1-based line and
/// column positions.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// Writes values with enough digits (17 significant) that reading the file
/// back reproduces each double exactly.
void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

/// Builds a Dataset from a table: the first column is the outcome, the rest
/// are predictors, plus a leading intercept column unless `add_intercept` is
/// false. `binary_col`, if given, names a predictor column (header name or
/// 0-based predictor index) to validate as the binary regressor.
Dataset dataset_from_table(const CsvTable& table, const std::string& binary_col = "",
                           bool add_intercept = true);

}  // namespace sandwich
