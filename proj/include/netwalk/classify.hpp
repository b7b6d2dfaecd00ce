#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace netwalk {

inline constexpr double kDefaultShrinkage = 1e-4;

// Linear discriminant analysis with a shared, diagonally shrunk covariance.
// Fitting works on z-scored features (training statistics); all public
// vectors are expressed in the original feature coordinates.
struct LdaModel {
    std::vector<std::string> classes;  // sorted
    std::vector<double> priors;
    Eigen::VectorXd center, scale;     // z = (x - center) / scale
    Eigen::MatrixXd class_means;       // one row per class, standardized space
    Eigen::MatrixXd covariance;        // shrunk pooled within-class covariance, standardized space
    Eigen::MatrixXd coef;              // Sigma^-1 mu_k, one column per class
    Eigen::VectorXd intercept;
    // Discriminant directions (columns), original coordinates, unit norm,
    // ordered by decreasing between/within ratio; at most classes-1 of them.
    Eigen::MatrixXd directions;
    Eigen::VectorXd direction_ratios;

    std::size_t width() const { return static_cast<std::size_t>(center.size()); }
    Eigen::VectorXd scores(const Eigen::VectorXd& x) const;
};

LdaModel lda_fit(const Eigen::MatrixXd& X, const std::vector<std::string>& y,
                 double shrinkage = kDefaultShrinkage);
std::vector<std::string> lda_predict(const LdaModel& model, const Eigen::MatrixXd& X);

struct CvOptions {
    std::size_t folds = 10;
    std::uint64_t seed = 0;
    bool stratified = true;
    double shrinkage = kDefaultShrinkage;
    unsigned threads = 1;
};

struct CvReport {
    std::vector<std::string> classes;
    std::vector<std::size_t> fold_of;     // fold index per sample
    std::vector<double> fold_accuracy;    // percent
    double mean_accuracy = 0;             // percent
    double std_accuracy = 0;              // percent, population std over folds
    Eigen::MatrixXi confusion;            // rows: true class, cols: predicted
};

// Deterministic fold assignment (stratified by class when requested).
std::vector<std::size_t> assign_folds(const std::vector<std::string>& y, const CvOptions& opts);

CvReport cross_validate(const Eigen::MatrixXd& X, const std::vector<std::string>& y,
                        const CvOptions& opts = {});

}  // namespace netwalk
