#include "netwalk/csv.hpp"

#include "netwalk/error.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace netwalk {

std::string format_double(double x) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
    return std::string(buf, r.ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    out.push_back(cell);
    return out;
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string q = "\"";
    for (char c : cell) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& fm) {
    for (const auto& c : fm.columns) out << csv_quote(c) << ',';
    out << "label\n";
    for (Eigen::Index i = 0; i < fm.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < fm.values.cols(); ++j) out << format_double(fm.values(i, j)) << ',';
        out << csv_quote(fm.labels[static_cast<std::size_t>(i)]) << '\n';
    }
}

void write_feature_csv(const std::string& path, const FeatureMatrix& fm) {
    std::ostringstream os;
    write_feature_csv(os, fm);
    write_text_file(path, os.str());
}

FeatureMatrix read_feature_csv(std::istream& in, const std::string& source) {
    FeatureMatrix fm;
    std::string line;
    if (!std::getline(in, line)) throw DataError(source + ": empty feature file");
    auto header = split_csv_line(line);
    if (header.empty() || header.back() != "label") {
        throw DataError(source + ": last header column must be 'label'");
    }
    fm.columns.assign(header.begin(), header.end() - 1);
    std::vector<double> flat;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw DataError(source + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(header.size()) + " columns, got " + std::to_string(cells.size()));
        }
        for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
            double v = 0;
            const auto& s = cells[j];
            auto r = std::from_chars(s.data(), s.data() + s.size(), v);
            if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
                throw DataError(source + ":" + std::to_string(lineno) + ": bad number '" + s + "'");
            }
            flat.push_back(v);
        }
        fm.labels.push_back(cells.back());
    }
    const auto rows = static_cast<Eigen::Index>(fm.labels.size());
    const auto cols = static_cast<Eigen::Index>(fm.columns.size());
    fm.values.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) fm.values(i, j) = flat[static_cast<std::size_t>(i * cols + j)];
    }
    return fm;
}

FeatureMatrix read_feature_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open feature file '" + path + "'");
    return read_feature_csv(in, path);
}

void write_report_header(std::ostream& out, std::size_t folds) {
    out << "feature_set,dataset,mean_acc,std_acc";
    for (std::size_t f = 1; f <= folds; ++f) out << ",fold_" << f;
    out << '\n';
}

void write_report_row(std::ostream& out, const std::string& feature_set, const std::string& dataset,
                      const CvReport& rep) {
    out << csv_quote(feature_set) << ',' << csv_quote(dataset) << ',' << format_fixed(rep.mean_accuracy, 4) << ','
        << format_fixed(rep.std_accuracy, 4);
    for (double a : rep.fold_accuracy) out << ',' << format_fixed(a, 4);
    out << '\n';
}

void write_confusion_csv(std::ostream& out, const CvReport& rep) {
    out << "true\\predicted";
    for (const auto& c : rep.classes) out << ',' << csv_quote(c);
    out << '\n';
    for (Eigen::Index i = 0; i < rep.confusion.rows(); ++i) {
        out << csv_quote(rep.classes[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < rep.confusion.cols(); ++j) out << ',' << rep.confusion(i, j);
        out << '\n';
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << content;
    if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace netwalk
