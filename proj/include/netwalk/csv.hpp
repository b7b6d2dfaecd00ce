#pragma once

#include "netwalk/classify.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace netwalk {

// Shortest round-trip decimal form of a double.
std::string format_double(double x);
// Fixed-point with the given number of decimals.
std::string format_fixed(double x, int decimals);

std::vector<std::string> split_csv_line(const std::string& line);
// Quotes a cell only when it holds a comma, quote or newline.
std::string csv_quote(const std::string& cell);

// Feature matrix CSV: header of column names, one row per graph, final
// column `label`.
struct FeatureMatrix {
    std::vector<std::string> columns;
    Eigen::MatrixXd values;
    std::vector<std::string> labels;
};

void write_feature_csv(std::ostream& out, const FeatureMatrix& fm);
void write_feature_csv(const std::string& path, const FeatureMatrix& fm);
FeatureMatrix read_feature_csv(std::istream& in, const std::string& source = "<stream>");
FeatureMatrix read_feature_csv(const std::string& path);

// Report CSV: feature_set,dataset,mean_acc,std_acc,fold_1..fold_k
void write_report_header(std::ostream& out, std::size_t folds);
void write_report_row(std::ostream& out, const std::string& feature_set, const std::string& dataset,
                      const CvReport& rep);
void write_confusion_csv(std::ostream& out, const CvReport& rep);

// Writes content to path atomically enough for our purposes (truncate+write).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace netwalk
