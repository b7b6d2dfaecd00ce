#include "netwalk/classify.hpp"

#include "netwalk/error.hpp"
#include "netwalk/parallel.hpp"
#include "netwalk/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace netwalk {

namespace {

std::vector<std::string> sorted_classes(const std::vector<std::string>& y) {
    std::vector<std::string> c(y.begin(), y.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

std::size_t class_index(const std::vector<std::string>& classes, const std::string& label) {
    auto it = std::lower_bound(classes.begin(), classes.end(), label);
    return static_cast<std::size_t>(it - classes.begin());
}

}  // namespace

LdaModel lda_fit(const Eigen::MatrixXd& X, const std::vector<std::string>& y, double shrinkage) {
    const Eigen::Index n = X.rows();
    const Eigen::Index p = X.cols();
    if (static_cast<std::size_t>(n) != y.size()) throw ArgumentError("lda_fit: row/label count mismatch");
    if (p == 0) throw ArgumentError("lda_fit: no features");
    if (!X.allFinite()) throw DataError("lda_fit: features contain NaN or infinity");
    if (!(shrinkage >= 0.0 && shrinkage <= 1.0)) throw ArgumentError("lda_fit: shrinkage must be in [0, 1]");

    LdaModel m;
    m.classes = sorted_classes(y);
    const auto k = static_cast<Eigen::Index>(m.classes.size());
    if (k < 2) throw DataError("lda_fit: need at least two classes, got " + std::to_string(k));
    if (n <= k) throw DataError("lda_fit: need more samples than classes");

    m.center = X.colwise().mean().transpose();
    Eigen::MatrixXd Z = X.rowwise() - m.center.transpose();
    m.scale = (Z.colwise().squaredNorm() / static_cast<double>(n)).cwiseSqrt().transpose();
    for (Eigen::Index j = 0; j < p; ++j) {
        if (!(m.scale(j) > 0.0)) m.scale(j) = 1.0;
    }
    Z = Z.array().rowwise() / m.scale.transpose().array();

    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    std::vector<double> counts(static_cast<std::size_t>(k), 0.0);
    m.class_means = Eigen::MatrixXd::Zero(k, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        idx[static_cast<std::size_t>(i)] = class_index(m.classes, y[static_cast<std::size_t>(i)]);
        const auto c = static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]);
        m.class_means.row(c) += Z.row(i);
        counts[static_cast<std::size_t>(c)] += 1.0;
    }
    for (Eigen::Index c = 0; c < k; ++c) m.class_means.row(c) /= counts[static_cast<std::size_t>(c)];
    for (auto c : counts) m.priors.push_back(c / static_cast<double>(n));

    Eigen::MatrixXd centered(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        centered.row(i) = Z.row(i) - m.class_means.row(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]));
    }
    Eigen::MatrixXd within = centered.transpose() * centered / static_cast<double>(n - k);

    // Shrink toward the diagonal; diagonal entries that vanish (features
    // constant within every class) get a small floor so the solve stays PD.
    Eigen::VectorXd diag = within.diagonal();
    double floor = shrinkage * diag.mean();
    if (!(floor > 0.0)) floor = std::max(shrinkage, 1e-12);
    m.covariance = (1.0 - shrinkage) * within;
    m.covariance.diagonal() += shrinkage * diag;
    for (Eigen::Index j = 0; j < p; ++j) {
        if (m.covariance(j, j) < floor) m.covariance(j, j) = floor;
    }

    Eigen::LDLT<Eigen::MatrixXd> solver(m.covariance);
    if (solver.info() != Eigen::Success) throw DataError("lda_fit: covariance factorization failed");
    m.coef = solver.solve(m.class_means.transpose());
    m.intercept.resize(k);
    for (Eigen::Index c = 0; c < k; ++c) {
        m.intercept(c) = -0.5 * m.class_means.row(c).dot(m.coef.col(c)) +
                         std::log(m.priors[static_cast<std::size_t>(c)]);
    }

    // Between-class scatter (prior-weighted; the overall mean is 0 after centering).
    Eigen::MatrixXd between = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index c = 0; c < k; ++c) {
        between += m.priors[static_cast<std::size_t>(c)] * m.class_means.row(c).transpose() * m.class_means.row(c);
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(between, m.covariance);
    if (ges.info() != Eigen::Success) throw DataError("lda_fit: discriminant eigenproblem failed");
    const Eigen::Index ndir = std::min<Eigen::Index>(k - 1, p);
    m.directions.resize(p, ndir);
    m.direction_ratios.resize(ndir);
    for (Eigen::Index d = 0; d < ndir; ++d) {
        const Eigen::Index col = p - 1 - d;  // eigenvalues come out ascending
        Eigen::VectorXd w = ges.eigenvectors().col(col).array() / m.scale.array();
        m.directions.col(d) = w.normalized();
        m.direction_ratios(d) = ges.eigenvalues()(col);
    }
    return m;
}

Eigen::VectorXd LdaModel::scores(const Eigen::VectorXd& x) const {
    Eigen::VectorXd z = (x - center).array() / scale.array();
    return coef.transpose() * z + intercept;
}

std::vector<std::string> lda_predict(const LdaModel& model, const Eigen::MatrixXd& X) {
    if (static_cast<std::size_t>(X.cols()) != model.width()) {
        throw ArgumentError("lda_predict: model expects " + std::to_string(model.width()) +
                            " features, got " + std::to_string(X.cols()));
    }
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(X.rows()));
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        Eigen::VectorXd s = model.scores(X.row(i).transpose());
        Eigen::Index best = 0;
        for (Eigen::Index c = 1; c < s.size(); ++c) {
            if (s(c) > s(best)) best = c;
        }
        out.push_back(model.classes[static_cast<std::size_t>(best)]);
    }
    return out;
}

std::vector<std::size_t> assign_folds(const std::vector<std::string>& y, const CvOptions& opts) {
    const std::size_t n = y.size();
    if (opts.folds < 2) throw ArgumentError("cross-validation needs at least 2 folds");
    if (n < opts.folds) {
        throw DataError("cannot split " + std::to_string(n) + " samples into " + std::to_string(opts.folds) +
                        " folds");
    }
    auto rng = make_rng(derive_seed(opts.seed, {hash_label("folds")}));
    auto shuffle = [&](std::vector<std::size_t>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
    };
    std::vector<std::size_t> fold(n);
    std::size_t deal = 0;
    if (opts.stratified) {
        const auto classes = sorted_classes(y);
        std::vector<std::vector<std::size_t>> members(classes.size());
        for (std::size_t i = 0; i < n; ++i) members[class_index(classes, y[i])].push_back(i);
        // Dealing continues across classes so fold sizes differ by at most one.
        for (auto& group : members) {
            shuffle(group);
            for (auto i : group) fold[i] = deal++ % opts.folds;
        }
    } else {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        shuffle(order);
        for (auto i : order) fold[i] = deal++ % opts.folds;
    }
    return fold;
}

CvReport cross_validate(const Eigen::MatrixXd& X, const std::vector<std::string>& y, const CvOptions& opts) {
    if (static_cast<std::size_t>(X.rows()) != y.size()) throw ArgumentError("cross_validate: row/label mismatch");
    CvReport rep;
    rep.classes = sorted_classes(y);
    if (rep.classes.size() < 2) throw DataError("classification needs at least two classes");
    rep.fold_of = assign_folds(y, opts);

    const std::size_t k = opts.folds;
    const auto nc = static_cast<Eigen::Index>(rep.classes.size());
    std::vector<Eigen::MatrixXi> confusion(k, Eigen::MatrixXi::Zero(nc, nc));
    rep.fold_accuracy.assign(k, 0.0);

    parallel_for(k, opts.threads, [&](unsigned, std::size_t f) {
        std::vector<Eigen::Index> train, test;
        for (std::size_t i = 0; i < y.size(); ++i) {
            (rep.fold_of[i] == f ? test : train).push_back(static_cast<Eigen::Index>(i));
        }
        std::vector<std::string> ytrain;
        ytrain.reserve(train.size());
        for (auto i : train) ytrain.push_back(y[static_cast<std::size_t>(i)]);
        auto model = lda_fit(X(train, Eigen::all), ytrain, opts.shrinkage);
        auto pred = lda_predict(model, X(test, Eigen::all));
        std::size_t correct = 0;
        for (std::size_t t = 0; t < test.size(); ++t) {
            const auto& truth = y[static_cast<std::size_t>(test[t])];
            correct += pred[t] == truth;
            confusion[f](static_cast<Eigen::Index>(class_index(rep.classes, truth)),
                         static_cast<Eigen::Index>(class_index(rep.classes, pred[t])))++;
        }
        rep.fold_accuracy[f] = 100.0 * static_cast<double>(correct) / static_cast<double>(test.size());
    });

    rep.confusion = Eigen::MatrixXi::Zero(nc, nc);
    for (const auto& c : confusion) rep.confusion += c;
    double sum = 0;
    for (double a : rep.fold_accuracy) sum += a;
    rep.mean_accuracy = sum / static_cast<double>(k);
    double ss = 0;
    for (double a : rep.fold_accuracy) ss += (a - rep.mean_accuracy) * (a - rep.mean_accuracy);
    rep.std_accuracy = std::sqrt(ss / static_cast<double>(k));
    return rep;
}

}  // namespace netwalk
