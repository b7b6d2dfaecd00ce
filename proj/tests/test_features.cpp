#include "doctest.h"

#include "netwalk/error.hpp"
#include "netwalk/features.hpp"
#include "netwalk/generators.hpp"
#include "netwalk/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace netwalk;

namespace {

// Straight from the definitions, in input order.
DistributionStats reference_stats(std::vector<double> x) {
    const double n = static_cast<double>(x.size());
    DistributionStats s;
    s.mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0, c3 = 0, c4 = 0;
    for (double v : x) {
        ss += (v - s.mean) * (v - s.mean);
        c3 += std::pow(v - s.mean, 3);
        c4 += std::pow(v - s.mean, 4);
    }
    s.std = std::sqrt(ss / (n - 1));
    const double var = ss / n;
    s.skewness = (c3 / n) / std::pow(var, 1.5);
    s.kurtosis = (c4 / n) / (var * var) - 3;

    std::sort(x.begin(), x.end());
    auto q = [&](double p) {
        const double h = (n - 1) * p;
        const double lo = std::floor(h);
        const auto i = static_cast<std::size_t>(lo);
        return i + 1 < x.size() ? x[i] + (h - lo) * (x[i + 1] - x[i]) : x[i];
    };
    s.q25 = q(0.25);
    s.q50 = q(0.5);
    s.q75 = q(0.75);

    std::vector<double> counts(20, 0);
    for (double v : x) {
        int b = static_cast<int>(std::floor(20 * (v - x.front()) / (x.back() - x.front())));
        counts[static_cast<std::size_t>(std::clamp(b, 0, 19))] += 1;
    }
    for (double c : counts) {
        if (c > 0) s.entropy -= (c / n) * std::log(c / n);
    }
    return s;
}

void check_close(const DistributionStats& a, const DistributionStats& b, double tol) {
    auto x = a.as_array(), y = b.as_array();
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK_MESSAGE(std::abs(x[i] - y[i]) <= tol * std::max(1.0, std::abs(y[i])), kStatNames[i]);
    }
}

}  // namespace

TEST_CASE("stats_of on 1,2,3,4") {
    std::vector<double> v{1, 2, 3, 4};
    auto s = stats_of(v);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.std == doctest::Approx(1.2910).epsilon(1e-4));
    CHECK(s.q25 == doctest::Approx(1.75));
    CHECK(s.q50 == doctest::Approx(2.5));
    CHECK(s.q75 == doctest::Approx(3.25));
    CHECK(s.skewness == doctest::Approx(0.0));
    CHECK(s.kurtosis == doctest::Approx(-1.36));
    CHECK(s.entropy == doctest::Approx(std::log(4.0)));
}

TEST_CASE("stats_of degenerate inputs") {
    std::vector<double> c{3, 3, 3};
    auto s = stats_of(c);
    CHECK(s.mean == 3);
    CHECK(s.q25 == 3);
    CHECK(s.q75 == 3);
    CHECK(s.std == 0);
    CHECK(s.skewness == 0);
    CHECK(s.kurtosis == 0);
    CHECK(s.entropy == 0);

    std::vector<double> one{7};
    CHECK(stats_of(one).q50 == 7);
    CHECK_THROWS_AS(stats_of(std::vector<double>{}), ArgumentError);
}

TEST_CASE("property: stats_of matches the definitions and ignores order") {
    Rng rng = make_rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + uniform_index(rng, 200);
        std::vector<double> x(n);
        for (auto& v : x) v = uniform_unit(rng) * 10 - 3 + (uniform_index(rng, 4) == 0 ? 5 : 0);
        auto s = stats_of(x);
        check_close(s, reference_stats(x), 1e-12);

        std::vector<double> y = x;
        for (std::size_t i = y.size() - 1; i > 0; --i) std::swap(y[i], y[uniform_index(rng, i + 1)]);
        CHECK(stats_of(y) == s);
        CHECK(s.entropy >= 0);
        CHECK(s.entropy <= std::log(20.0) + 1e-12);
        CHECK(s.q25 <= s.q50);
        CHECK(s.q50 <= s.q75);
    }
}

TEST_CASE("visit_diff") {
    VisitProfile a, b;
    a.visits = {0.5, 1.0};
    b.visits = {0.25, 1.5};
    CHECK(visit_diff(a, b) == std::vector<double>{0.25, -0.5});
    b.visits.push_back(0);
    CHECK_THROWS_AS(visit_diff(a, b), ArgumentError);
}

TEST_CASE("feature set parsing, widths and names") {
    auto saw = parse_feature_set("saw");
    CHECK(saw.width() == 16);
    CHECK(saw.name() == "len+vis");
    CHECK(saw.column_names().front() == "saw_len_mean");
    CHECK(saw.column_names()[8] == "saw_visit_mean");

    auto full = parse_feature_set("full");
    CHECK(full.width() == 96);
    CHECK(full.name() == "len+vis+lmw:1..10");
    CHECK(full.column_names().back() == "lmw10_entropy");

    auto mixed = parse_feature_set("lmw:7,1..3+len");
    CHECK(mixed.lmw_memories == std::vector<std::size_t>{1, 2, 3, 7});
    CHECK(mixed.name() == "len+lmw:1..3,7");
    CHECK(parse_feature_set(mixed.name()).lmw_memories == mixed.lmw_memories);
    CHECK(mixed.width() == 40);

    CHECK_THROWS_AS(parse_feature_set("bogus"), ArgumentError);
    CHECK_THROWS_AS(parse_feature_set("lmw:0"), ArgumentError);
    CHECK_THROWS_AS(parse_feature_set("lmw:3..1"), ArgumentError);
    FeatureSetSpec none;
    none.include_saw_lengths = none.include_saw_visits = false;
    CHECK_THROWS_AS(none.validate(), ArgumentError);
}

TEST_CASE("extract_features") {
    WalkConfig cfg;
    cfg.walkers_per_node = 5;
    cfg.master_seed = 3;
    auto g = gen_er({Model::ER, 60, 6, 1});

    auto full = extract_features(g, cfg, parse_feature_set("full"));
    CHECK(full.size() == 96);
    for (double v : full) CHECK(std::isfinite(v));

    // Feature sets are column selections of one shared computation.
    auto part = extract_features(g, cfg, parse_feature_set("vis+lmw:2,4"));
    REQUIRE(part.size() == 24);
    CHECK(std::equal(part.begin(), part.begin() + 8, full.begin() + 8));
    CHECK(std::equal(part.begin() + 8, part.begin() + 16, full.begin() + 24));
    CHECK(std::equal(part.begin() + 16, part.end(), full.begin() + 40));

    auto again = extract_features(g, cfg, parse_feature_set("full"));
    CHECK(again == full);

    auto spec = parse_feature_set("len");
    spec.normalize_lengths_by_n = true;
    auto norm = extract_features(g, cfg, spec);
    CHECK(norm[0] == doctest::Approx(full[0] / 60.0));

    WalkStatistics ws = compute_walk_statistics(g, cfg, {1}, false);
    CHECK_THROWS_AS(ws.select(parse_feature_set("lmw:2")), ArgumentError);
}

TEST_CASE("SAW-minus-RW mean on K3 is exactly -1/3") {
    std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
    auto g = build_graph(3, e, false);
    WalkConfig cfg;
    cfg.walkers_per_node = 50;
    auto f = extract_features(g, cfg, parse_feature_set("vis"));
    CHECK(f[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    auto len = extract_features(g, cfg, parse_feature_set("len"));
    CHECK(len[0] == 2);
    CHECK(len[1] == 0);
}
