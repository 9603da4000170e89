#include "sandwich/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_cell(const std::string& raw, size_t line_no, size_t col_no) {
    const std::string cell = trimmed(raw);
    double value = 0.0;
    const auto* begin = cell.data();
    const auto* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || cell.empty()) {
        throw ValidationError("csv: line " + std::to_string(line_no) + ", column " +
                              std::to_string(col_no) + ": cannot parse \"" + cell +
                              "\" as a number");
    }
    if (!std::isfinite(value)) {
        throw ValidationError("csv: line " + std::to_string(line_no) + ", column " +
                              std::to_string(col_no) + ": value is not finite");
    }
    return value;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (table.columns.empty()) {
            for (const auto& cell : split_line(line)) table.columns.push_back(trimmed(cell));
            if (table.columns.empty()) throw ValidationError("csv: empty header row");
            continue;
        }

        const auto cells = split_line(line);
        if (cells.size() != table.columns.size()) {
            throw ValidationError("csv: line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.columns.size()) + " cells, got " +
                                  std::to_string(cells.size()));
        }
        std::vector<double> row(cells.size());
        for (size_t j = 0; j < cells.size(); ++j) row[j] = parse_cell(cells[j], line_no, j + 1);
        table.rows.push_back(std::move(row));
    }

    if (table.columns.empty()) throw ValidationError("csv: no header row found");
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("csv: cannot open \"" + path + "\" for reading");
    return read_csv(in);
}

void write_csv(std::ostream& out, const CsvTable& table) {
    for (size_t j = 0; j < table.columns.size(); ++j) {
        if (j) out << ',';
        out << table.columns[j];
    }
    out << '\n';

    char buf[64];
    for (const auto& row : table.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), row[j],
                                                 std::chars_format::general, 17);
            out.write(buf, ptr - buf);
            (void)ec;
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const CsvTable& table) {
    std::ofstream out(path);
    if (!out) throw ValidationError("csv: cannot open \"" + path + "\" for writing");
    write_csv(out, table);
    if (!out) throw ValidationError("csv: write to \"" + path + "\" failed");
}

Dataset dataset_from_table(const CsvTable& table, const std::string& binary_col,
                           bool add_intercept) {
    if (table.columns.size() < 2) {
        throw ValidationError("csv: need an outcome column and at least one predictor");
    }
    if (table.rows.empty()) throw ValidationError("csv: no data rows");

    const auto n = static_cast<Eigen::Index>(table.rows.size());
    const auto predictors = static_cast<Eigen::Index>(table.columns.size() - 1);
    const Eigen::Index p = predictors + (add_intercept ? 1 : 0);

    Dataset d;
    d.y.resize(n);
    d.x.resize(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = table.rows[static_cast<size_t>(i)];
        d.y[i] = row[0];
        Eigen::Index j = 0;
        if (add_intercept) d.x(i, j++) = 1.0;
        for (Eigen::Index k = 0; k < predictors; ++k) {
            d.x(i, j++) = row[static_cast<size_t>(k) + 1];
        }
    }

    if (!binary_col.empty()) {
        Eigen::Index predictor_index = -1;
        for (size_t c = 1; c < table.columns.size(); ++c) {
            if (table.columns[c] == binary_col) {
                predictor_index = static_cast<Eigen::Index>(c - 1);
                break;
            }
        }
        if (predictor_index < 0) {
            // Fall back to a 0-based predictor index.
            try {
                size_t pos = 0;
                const long idx = std::stol(binary_col, &pos);
                if (pos == binary_col.size() && idx >= 0 && idx < predictors) {
                    predictor_index = static_cast<Eigen::Index>(idx);
                }
            } catch (const std::exception&) {
            }
        }
        if (predictor_index < 0) {
            throw ValidationError("csv: binary column \"" + binary_col +
                                  "\" matches no predictor name or index");
        }
        d.binary_column = predictor_index + (add_intercept ? 1 : 0);
        Eigen::Index ones = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (d.x(i, *d.binary_column) == 1.0) ++ones;
        }
        d.m = ones;
    }

    validate_dataset(d.y, d.x, d.binary_column);
    return d;
}

}  // namespace sandwich
