#include "doctest.h"

#include "netwalk/classify.hpp"
#include "netwalk/error.hpp"
#include "netwalk/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>

using namespace netwalk;

namespace {

double gaussian(Rng& rng) {
    // Box-Muller over the library's uniform draws keeps the test platform independent.
    const double u1 = 1.0 - uniform_unit(rng), u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

struct Blobs {
    Eigen::MatrixXd X;
    std::vector<std::string> y;
};

Blobs blobs(std::size_t per_class, std::size_t classes, std::size_t dims, double separation, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    Blobs b;
    b.X.resize(static_cast<Eigen::Index>(per_class * classes), static_cast<Eigen::Index>(dims));
    for (std::size_t c = 0; c < classes; ++c) {
        for (std::size_t i = 0; i < per_class; ++i) {
            const auto r = static_cast<Eigen::Index>(c * per_class + i);
            for (std::size_t d = 0; d < dims; ++d) {
                b.X(r, static_cast<Eigen::Index>(d)) = gaussian(rng) + (d == c % dims ? separation * static_cast<double>(c) : 0.0);
            }
            b.y.push_back("c" + std::to_string(c));
        }
    }
    return b;
}

}  // namespace

TEST_CASE("one-dimensional boundary sits at the midpoint") {
    Eigen::MatrixXd X(10, 1);
    std::vector<std::string> y;
    for (int i = 0; i < 10; ++i) {
        X(i, 0) = i + 1;
        y.push_back(i < 5 ? "A" : "B");
    }
    auto m = lda_fit(X, y, 0.0);
    Eigen::MatrixXd probe(4, 1);
    probe << 5.4, 5.6, -100, 100;
    CHECK(lda_predict(m, probe) == std::vector<std::string>{"A", "B", "A", "B"});
    Eigen::VectorXd s = m.scores(Eigen::VectorXd::Constant(1, 5.5));
    CHECK(s(0) == doctest::Approx(s(1)).epsilon(1e-12));
}

TEST_CASE("duplicate column is absorbed by the shrinkage") {
    auto b = blobs(30, 2, 2, 4.0, 1);
    Eigen::MatrixXd dup(b.X.rows(), 3);
    dup << b.X, b.X.col(0);
    auto single = lda_predict(lda_fit(b.X, b.y), b.X);
    auto twin = lda_predict(lda_fit(dup, b.y), dup);
    CHECK(single == twin);
}

TEST_CASE("constant feature does not break the fit") {
    auto b = blobs(20, 2, 2, 5.0, 4);
    Eigen::MatrixXd X(b.X.rows(), 3);
    X << b.X, Eigen::VectorXd::Constant(b.X.rows(), 7.0);
    auto m = lda_fit(X, b.y);
    CHECK(m.directions.allFinite());
    CHECK(lda_predict(m, X) == lda_predict(lda_fit(b.X, b.y), b.X));
}

TEST_CASE("two-class direction is parallel to the Fisher solution") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto b = blobs(40, 2, 4, 2.0, seed);
        // Give the columns very different scales.
        for (Eigen::Index j = 0; j < 4; ++j) b.X.col(j) *= std::pow(10.0, static_cast<double>(j) - 1.0);
        auto m = lda_fit(b.X, b.y, 0.0);

        Eigen::RowVectorXd mu0 = b.X.topRows(40).colwise().mean();
        Eigen::RowVectorXd mu1 = b.X.bottomRows(40).colwise().mean();
        Eigen::MatrixXd c0 = b.X.topRows(40).rowwise() - mu0;
        Eigen::MatrixXd c1 = b.X.bottomRows(40).rowwise() - mu1;
        Eigen::MatrixXd sw = (c0.transpose() * c0 + c1.transpose() * c1) / 78.0;
        Eigen::VectorXd fisher = sw.colPivHouseholderQr().solve((mu1 - mu0).transpose()).normalized();

        Eigen::VectorXd w = m.directions.col(0);
        if (w.dot(fisher) < 0) w = -w;
        CHECK((w - fisher).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("well separated blobs are classified perfectly") {
    auto b = blobs(25, 4, 4, 10.0, 8);
    auto rep = cross_validate(b.X, b.y);
    CHECK(rep.mean_accuracy == 100.0);
    CHECK(rep.std_accuracy == 0.0);
    CHECK(rep.confusion.sum() == 100);
    CHECK(rep.confusion.trace() == 100);
}

TEST_CASE("shuffled labels give chance accuracy") {
    auto b = blobs(50, 4, 6, 0.0, 12);
    Rng rng = make_rng(13);
    for (std::size_t i = b.y.size(); i > 1; --i) std::swap(b.y[i - 1], b.y[uniform_index(rng, i)]);
    auto rep = cross_validate(b.X, b.y);
    CHECK(rep.mean_accuracy >= 15.0);
    CHECK(rep.mean_accuracy <= 35.0);
}

TEST_CASE("feature scaling does not change predictions") {
    auto b = blobs(30, 3, 3, 2.0, 21);
    Eigen::MatrixXd scaled = b.X;
    scaled.col(1) *= 1e6;
    scaled.col(2) = scaled.col(2).array() * 1e-4 + 50.0;
    CHECK(lda_predict(lda_fit(b.X, b.y), b.X) == lda_predict(lda_fit(scaled, b.y), scaled));
}

TEST_CASE("assign_folds partitions and stratifies") {
    std::vector<std::string> y;
    for (int i = 0; i < 47; ++i) y.push_back(i % 3 == 0 ? "a" : (i % 3 == 1 ? "b" : "c"));
    CvOptions o;
    o.seed = 5;
    auto folds = assign_folds(y, o);
    REQUIRE(folds.size() == y.size());
    std::vector<int> size(10, 0);
    std::map<std::string, std::vector<int>> per_class;
    for (std::size_t i = 0; i < y.size(); ++i) {
        REQUIRE(folds[i] < 10);
        size[folds[i]]++;
        per_class[y[i]].resize(10);
        per_class[y[i]][folds[i]]++;
    }
    CHECK(*std::max_element(size.begin(), size.end()) - *std::min_element(size.begin(), size.end()) <= 1);
    for (auto& [label, counts] : per_class) {
        CHECK(*std::max_element(counts.begin(), counts.end()) - *std::min_element(counts.begin(), counts.end()) <= 1);
    }
    CHECK(assign_folds(y, o) == folds);
    o.seed = 6;
    CHECK_FALSE(assign_folds(y, o) == folds);
    o.stratified = false;
    auto plain = assign_folds(y, o);
    std::vector<int> plain_size(10, 0);
    for (auto f : plain) plain_size[f]++;
    CHECK(*std::max_element(plain_size.begin(), plain_size.end()) -
              *std::min_element(plain_size.begin(), plain_size.end()) <=
          1);

    o.folds = 1;
    CHECK_THROWS_AS(assign_folds(y, o), ArgumentError);
    o.folds = 50;
    CHECK_THROWS_AS(assign_folds(y, o), DataError);
}

TEST_CASE("cross_validate report and errors") {
    auto b = blobs(20, 3, 3, 1.5, 30);
    CvOptions o;
    o.seed = 2;
    auto one = cross_validate(b.X, b.y, o);
    o.threads = 4;
    auto four = cross_validate(b.X, b.y, o);
    CHECK(one.fold_accuracy == four.fold_accuracy);
    CHECK(one.confusion == four.confusion);

    double mean = 0;
    for (double a : one.fold_accuracy) mean += a / 10.0;
    double var = 0;
    for (double a : one.fold_accuracy) var += (a - mean) * (a - mean) / 10.0;
    CHECK(one.mean_accuracy == doctest::Approx(mean));
    CHECK(one.std_accuracy == doctest::Approx(std::sqrt(var)));
    CHECK(one.classes == std::vector<std::string>{"c0", "c1", "c2"});

    std::vector<std::string> single(b.y.size(), "x");
    CHECK_THROWS_AS(cross_validate(b.X, single), DataError);
    CHECK_THROWS_AS(lda_fit(b.X, single), DataError);

    auto m = lda_fit(b.X, b.y);
    CHECK_THROWS_AS(lda_predict(m, Eigen::MatrixXd::Zero(2, 5)), ArgumentError);
    Eigen::MatrixXd bad = b.X;
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(lda_fit(bad, b.y), DataError);
}
