#include "splcm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace splcm {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    while (end && *end == ' ') ++end;
    return end && *end == '\0';
}

std::vector<std::vector<double>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (!parse_double(fields[i], row[i])) {
                numeric = false;
                break;
            }
        if (!numeric) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw ParseError(path + ": non-numeric row in data section");
        }
        if (width == 0)
            width = row.size();
        else if (row.size() != width)
            throw ParseError(path + ": ragged rows");
        rows.push_back(std::move(row));
        first = false;
    }
    if (rows.empty()) throw ParseError(path + ": no data rows");
    return rows;
}

}  // namespace

Matrix read_csv_matrix(const std::string& path) {
    auto rows = read_rows(path);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

LabeledData read_labeled_csv(const std::string& path) {
    auto rows = read_rows(path);
    if (rows.front().size() < 2)
        throw ParseError(path + ": labeled data needs at least one feature column");
    LabeledData out;
    const int p = static_cast<int>(rows.front().size()) - 1;
    out.x = Matrix(static_cast<int>(rows.size()), p);
    out.labels.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < p; ++j) out.x(static_cast<int>(i), j) = rows[i][j];
        double lab = rows[i].back();
        if (lab != std::floor(lab))
            throw ParseError(path + ": label column must hold integers");
        out.labels[i] = static_cast<int>(lab);
    }
    return out;
}

void write_csv_matrix(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    if (!header.empty()) {
        for (std::size_t j = 0; j < header.size(); ++j)
            out << (j ? "," : "") << header[j];
        out << "\n";
    }
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) out << (j ? "," : "") << format_double(m(i, j));
        out << "\n";
    }
}

void write_csv_matrix(const std::string& path, const SymMatrix& m) {
    Matrix d(m.dim(), m.dim());
    for (int j = 0; j < m.dim(); ++j)
        for (int k = 0; k < m.dim(); ++k) d(j, k) = m(j, k);
    write_csv_matrix(path, d);
}

}  // namespace splcm
