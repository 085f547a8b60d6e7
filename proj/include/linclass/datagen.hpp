#pragma once

// Synthetic two-class generators, CSV ingestion for experimental datasets,
// and grid-field segmentation.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linclass/linalg.hpp"

namespace linclass {

struct Dataset {
    DenseMatrix features;                   // N raw rows x raw_dim columns
    Vector targets;                         // length N, entries in {0,1}
    std::vector<std::string> column_names;  // one per feature column
};

struct NoiseSpec {
    double delta = 0.0;  // noise level in [0,1]
    std::uint64_t seed = 1;
};

// Points scattered around the line y = 1.2 - 0.5 x on [x_lo, x_hi]:
// multiplicative noise y (1 + delta*alpha) with alpha uniform on (-1,1),
// then vertical jitter uniform on (-jitter, jitter) so both classes are
// populated. Label is 1 where y - 1.2 + 0.5 x > 0.
Dataset gen_linear_two_class(std::size_t n, double x_lo, double x_hi, const NoiseSpec& noise,
                             double jitter = 1.0);

// n/2 class-1 points uniform in the disk of radius r_inner, the rest class-0
// on an annulus at r_outer +/- 10%. Separable by a circle, not by a line.
Dataset gen_circle_two_class(std::size_t n, double r_inner, double r_outer, std::uint64_t seed);

struct CsvLoadResult {
    Dataset dataset;
    std::size_t skipped_rows = 0;  // rows whose label had no mapping
};

// Header-driven CSV reader. label_map sends label strings to 0 or 1; rows
// with unmapped labels are skipped and counted.
CsvLoadResult load_csv(const std::string& path, const std::vector<std::string>& feature_columns,
                       const std::string& label_column, const std::map<std::string, int>& label_map);

// Numeric-label convenience: label 1 where the column value > threshold.
CsvLoadResult load_csv_threshold(const std::string& path,
                                 const std::vector<std::string>& feature_columns,
                                 const std::string& label_column, double threshold);

// Feature columns plus a final "label" column, full round-trip precision.
void save_csv(const Dataset& dataset, const std::string& path);

// Headerless numeric grid, one row per line.
DenseMatrix load_field_csv(const std::string& path);

// Each grid node (row r, col c) of an n x n field becomes the point
// (c/(n-1), r/(n-1)) with target 1 where the value exceeds the threshold.
Dataset segment_field(const DenseMatrix& values, double threshold = 4.0);

// Shortest decimal string that round-trips a double exactly.
std::string format_double(double v);

}  // namespace linclass
