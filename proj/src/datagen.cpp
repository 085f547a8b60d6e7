#include "linclass/datagen.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace linclass {

namespace {

void validate_noise(const NoiseSpec& noise) {
    if (!(noise.delta >= 0.0 && noise.delta <= 1.0)) {
        throw OutOfRange("noise level delta must be in [0,1], got " +
                         std::to_string(noise.delta));
    }
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Dataset gen_linear_two_class(std::size_t n, double x_lo, double x_hi, const NoiseSpec& noise,
                             double jitter) {
    if (n < 2) throw OutOfRange("gen_linear_two_class: n must be >= 2");
    if (!(x_lo < x_hi)) throw OutOfRange("gen_linear_two_class: need x_lo < x_hi");
    if (jitter < 0.0) throw OutOfRange("gen_linear_two_class: jitter must be >= 0");
    validate_noise(noise);

    std::mt19937_64 rng(noise.seed);
    std::uniform_real_distribution<double> ux(x_lo, x_hi);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    Dataset d;
    d.features = DenseMatrix(n, 2);
    d.targets.resize(n);
    d.column_names = {"x", "y"};
    for (std::size_t i = 0; i < n; ++i) {
        const double x = ux(rng);
        const double y = 1.2 - 0.5 * x;
        const double noise_term = y * (noise.delta * unit(rng));
        const double jitter_term = jitter * unit(rng);
        d.features(i, 0) = x;
        d.features(i, 1) = y + noise_term + jitter_term;
        // y_point - 1.2 + 0.5 x > 0, evaluated as the offset from the line so
        // noiseless points sit exactly on the equality boundary
        d.targets[i] = (noise_term + jitter_term > 0.0) ? 1.0 : 0.0;
    }
    return d;
}

Dataset gen_circle_two_class(std::size_t n, double r_inner, double r_outer, std::uint64_t seed) {
    if (n < 2) throw OutOfRange("gen_circle_two_class: n must be >= 2");
    if (!(0.0 < r_inner && r_inner < r_outer)) {
        throw OutOfRange("gen_circle_two_class: need 0 < r_inner < r_outer");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double two_pi = 2.0 * std::acos(-1.0);

    const std::size_t n_inner = n / 2;
    Dataset d;
    d.features = DenseMatrix(n, 2);
    d.targets.resize(n);
    d.column_names = {"x", "y"};
    for (std::size_t i = 0; i < n; ++i) {
        const bool inner = i < n_inner;
        // sqrt for area-uniform disk samples
        const double r = inner ? r_inner * std::sqrt(u01(rng))
                               : r_outer * (0.9 + 0.2 * u01(rng));
        const double phi = two_pi * u01(rng);
        d.features(i, 0) = r * std::cos(phi);
        d.features(i, 1) = r * std::sin(phi);
        d.targets[i] = inner ? 1.0 : 0.0;
    }
    return d;
}

CsvLoadResult load_csv(const std::string& path, const std::vector<std::string>& feature_columns,
                       const std::string& label_column,
                       const std::map<std::string, int>& label_map) {
    for (const auto& [label, cls] : label_map) {
        if (cls != 0 && cls != 1) {
            throw OutOfRange("load_csv: label '" + label + "' maps to " + std::to_string(cls) +
                             ", expected 0 or 1");
        }
    }

    std::ifstream in(path);
    if (!in) throw ParseError("load_csv: cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("load_csv: '" + path + "' is empty");
    const std::vector<std::string> header = split_line(strip_cr(line));

    const auto column_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw MissingColumn("load_csv: no column '" + name + "' in '" + path + "'");
    };

    std::vector<std::size_t> feature_idx;
    for (const auto& name : feature_columns) feature_idx.push_back(column_index(name));
    const std::size_t label_idx = column_index(label_column);

    std::vector<double> values;
    Vector targets;
    std::size_t skipped = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        const auto mapped = label_map.find(fields[label_idx]);
        if (mapped == label_map.end()) {
            ++skipped;
            continue;
        }
        for (std::size_t idx : feature_idx) values.push_back(parse_number(fields[idx], line_no));
        targets.push_back(static_cast<double>(mapped->second));
    }

    CsvLoadResult result;
    result.skipped_rows = skipped;
    result.dataset.features =
        DenseMatrix(targets.size(), feature_columns.size(), std::move(values));
    result.dataset.targets = std::move(targets);
    result.dataset.column_names = feature_columns;
    ensure_finite(result.dataset.features, "load_csv");
    return result;
}

CsvLoadResult load_csv_threshold(const std::string& path,
                                 const std::vector<std::string>& feature_columns,
                                 const std::string& label_column, double threshold) {
    // Same mechanics as load_csv, but the label column is numeric and
    // compared against a threshold instead of mapped.
    std::ifstream in(path);
    if (!in) throw ParseError("load_csv: cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("load_csv: '" + path + "' is empty");
    const std::vector<std::string> header = split_line(strip_cr(line));

    const auto column_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw MissingColumn("load_csv: no column '" + name + "' in '" + path + "'");
    };

    std::vector<std::size_t> feature_idx;
    for (const auto& name : feature_columns) feature_idx.push_back(column_index(name));
    const std::size_t label_idx = column_index(label_column);

    std::vector<double> values;
    Vector targets;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        const double label_value = parse_number(fields[label_idx], line_no);
        for (std::size_t idx : feature_idx) values.push_back(parse_number(fields[idx], line_no));
        targets.push_back(label_value > threshold ? 1.0 : 0.0);
    }

    CsvLoadResult result;
    result.dataset.features =
        DenseMatrix(targets.size(), feature_columns.size(), std::move(values));
    result.dataset.targets = std::move(targets);
    result.dataset.column_names = feature_columns;
    ensure_finite(result.dataset.features, "load_csv");
    return result;
}

void save_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("save_csv: cannot open '" + path + "' for writing");
    for (const auto& name : dataset.column_names) out << name << ',';
    out << "label\n";
    for (std::size_t i = 0; i < dataset.features.rows(); ++i) {
        for (std::size_t j = 0; j < dataset.features.cols(); ++j) {
            out << format_double(dataset.features(i, j)) << ',';
        }
        out << static_cast<int>(dataset.targets[i]) << '\n';
    }
}

DenseMatrix load_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_field_csv: cannot open '" + path + "'");

    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (cols == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(cols) + " fields, got " +
                             std::to_string(fields.size()));
        }
        for (const auto& f : fields) values.push_back(parse_number(f, line_no));
        ++rows;
    }
    if (rows == 0) throw EmptyGrid("load_field_csv: '" + path + "' has no data");
    return DenseMatrix(rows, cols, std::move(values));
}

Dataset segment_field(const DenseMatrix& values, double threshold) {
    if (values.rows() == 0 || values.cols() == 0) throw EmptyGrid("segment_field: empty grid");
    ensure_finite(values, "segment_field");

    const double row_span = values.rows() > 1 ? static_cast<double>(values.rows() - 1) : 1.0;
    const double col_span = values.cols() > 1 ? static_cast<double>(values.cols() - 1) : 1.0;

    Dataset d;
    d.features = DenseMatrix(values.rows() * values.cols(), 2);
    d.targets.resize(values.rows() * values.cols());
    d.column_names = {"x", "y"};
    std::size_t k = 0;
    for (std::size_t r = 0; r < values.rows(); ++r) {
        for (std::size_t c = 0; c < values.cols(); ++c, ++k) {
            d.features(k, 0) = static_cast<double>(c) / col_span;
            d.features(k, 1) = static_cast<double>(r) / row_span;
            d.targets[k] = values(r, c) > threshold ? 1.0 : 0.0;
        }
    }
    return d;
}

}  // namespace linclass
