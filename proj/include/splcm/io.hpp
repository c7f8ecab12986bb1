#pragma once

#include <string>
#include <vector>

#include "splcm/symvec.hpp"

// CSV ingestion and emission. Matrices are comma-separated, row-major,
// with an optional single header row (auto-detected when the first row is
// non-numeric). Doubles are written with 17 significant digits so reruns
// reproduce files bitwise.

namespace splcm {

struct LabeledData {
    Matrix x;
    std::vector<int> labels;
};

Matrix read_csv_matrix(const std::string& path);
// last column = integer class label
LabeledData read_labeled_csv(const std::string& path);

void write_csv_matrix(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header = {});
void write_csv_matrix(const std::string& path, const SymMatrix& m);

std::string format_double(double v);

}  // namespace splcm
