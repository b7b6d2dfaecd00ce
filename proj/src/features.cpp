#include "netwalk/features.hpp"

#include "netwalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace netwalk {

namespace {

double quantile_sorted(const std::vector<double>& v, double q) {
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= v.size()) return v.back();
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

}  // namespace

DistributionStats stats_of(std::span<const double> values) {
    if (values.empty()) throw ArgumentError("stats_of: empty input");
    // Everything is evaluated over the sorted copy, which makes the result
    // independent of input order bit for bit.
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const auto n = static_cast<double>(v.size());

    DistributionStats s;
    double sum = 0.0;
    for (double x : v) sum += x;
    s.mean = sum / n;
    s.q25 = quantile_sorted(v, 0.25);
    s.q50 = quantile_sorted(v, 0.50);
    s.q75 = quantile_sorted(v, 0.75);

    const double lo = v.front(), hi = v.back();
    if (lo == hi) {
        s.mean = lo;
        return s;
    }

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = x - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    s.std = v.size() > 1 ? std::sqrt(m2 / (n - 1.0)) : 0.0;
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2) - 3.0;
    }

    std::array<std::size_t, kEntropyBins> bins{};
    const double width = (hi - lo) / static_cast<double>(kEntropyBins);
    for (double x : v) {
        auto b = static_cast<std::size_t>((x - lo) / width);
        bins[std::min(b, kEntropyBins - 1)]++;
    }
    for (auto c : bins) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        s.entropy -= p * std::log(p);
    }
    return s;
}

std::vector<double> visit_diff(const VisitProfile& profile, const VisitProfile& baseline) {
    if (profile.visits.size() != baseline.visits.size()) {
        throw ArgumentError("visit_diff: profiles cover " + std::to_string(profile.visits.size()) + " and " +
                            std::to_string(baseline.visits.size()) + " nodes");
    }
    std::vector<double> out(profile.visits.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = profile.visits[i] - baseline.visits[i];
    return out;
}

std::size_t FeatureSetSpec::block_count() const {
    return (include_saw_lengths ? 1 : 0) + (include_saw_visits ? 1 : 0) + lmw_memories.size();
}

void FeatureSetSpec::validate() const {
    if (block_count() == 0) throw ArgumentError("feature set selects no blocks");
    for (auto m : lmw_memories) {
        if (m < 1) throw ArgumentError("LMW memory must be >= 1");
    }
    if (!std::is_sorted(lmw_memories.begin(), lmw_memories.end()) ||
        std::adjacent_find(lmw_memories.begin(), lmw_memories.end()) != lmw_memories.end()) {
        throw ArgumentError("LMW memories must be strictly ascending");
    }
}

std::vector<std::string> FeatureSetSpec::column_names() const {
    std::vector<std::string> cols;
    auto block = [&](const std::string& prefix) {
        for (const char* s : kStatNames) cols.push_back(prefix + "_" + s);
    };
    if (include_saw_lengths) block("saw_len");
    if (include_saw_visits) block("saw_visit");
    for (auto m : lmw_memories) block("lmw" + std::to_string(m));
    return cols;
}

std::string FeatureSetSpec::name() const {
    std::vector<std::string> parts;
    if (include_saw_lengths) parts.emplace_back("len");
    if (include_saw_visits) parts.emplace_back("vis");
    if (!lmw_memories.empty()) {
        std::string s = "lmw:";
        for (std::size_t i = 0; i < lmw_memories.size();) {
            std::size_t j = i;
            while (j + 1 < lmw_memories.size() && lmw_memories[j + 1] == lmw_memories[j] + 1) ++j;
            if (i > 0) s += ',';
            s += std::to_string(lmw_memories[i]);
            if (j > i) s += ".." + std::to_string(lmw_memories[j]);
            i = j + 1;
        }
        parts.push_back(s);
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i];
    return out;
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& context) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) throw ArgumentError("bad number '" + s + "' in " + context);
    return v;
}

std::vector<std::size_t> parse_memory_list(const std::string& text) {
    std::set<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.insert(parse_count(item, "memory list"));
        } else {
            auto a = parse_count(item.substr(0, dots), "memory list");
            auto b = parse_count(item.substr(dots + 2), "memory list");
            if (a > b) throw ArgumentError("empty memory range '" + item + "'");
            for (auto m = a; m <= b; ++m) out.insert(m);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

FeatureSetSpec parse_feature_set(const std::string& text) {
    FeatureSetSpec spec;
    spec.include_saw_lengths = false;
    spec.include_saw_visits = false;
    std::set<std::size_t> mems;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (part == "len" || part == "saw-length" || part == "length") {
            spec.include_saw_lengths = true;
        } else if (part == "vis" || part == "saw-visits" || part == "visits") {
            spec.include_saw_visits = true;
        } else if (part == "saw") {
            spec.include_saw_lengths = spec.include_saw_visits = true;
        } else if (part == "full") {
            spec.include_saw_lengths = spec.include_saw_visits = true;
            for (std::size_t m = 1; m <= 10; ++m) mems.insert(m);
        } else if (part.rfind("lmw:", 0) == 0) {
            for (auto m : parse_memory_list(part.substr(4))) mems.insert(m);
        } else {
            throw ArgumentError("unknown feature block '" + part + "' in '" + text +
                                "' (expected len, vis, saw, full or lmw:<list>)");
        }
    }
    spec.lmw_memories.assign(mems.begin(), mems.end());
    spec.validate();
    return spec;
}

std::vector<double> WalkStatistics::select(const FeatureSetSpec& spec) const {
    std::vector<double> out;
    out.reserve(spec.width());
    auto put = [&](const DistributionStats& s) {
        auto a = s.as_array();
        out.insert(out.end(), a.begin(), a.end());
    };
    if (spec.include_saw_lengths) put(spec.normalize_lengths_by_n ? saw_lengths_normalized : saw_lengths);
    if (spec.include_saw_visits) put(saw_visit_diff);
    for (auto m : spec.lmw_memories) {
        auto it = std::find(memories.begin(), memories.end(), m);
        if (it == memories.end()) {
            throw ArgumentError("LMW memory " + std::to_string(m) + " was not simulated");
        }
        put(lmw_diff[static_cast<std::size_t>(it - memories.begin())]);
    }
    return out;
}

WalkStatistics compute_walk_statistics(const Graph& g, const WalkConfig& cfg,
                                       const std::vector<std::size_t>& memories, bool need_saw) {
    cfg.validate();
    WalkStatistics ws;
    const auto rw = run_rw(g, cfg);
    if (need_saw) {
        const auto saw = run_saw(g, cfg);
        std::vector<double> len(saw.lengths.begin(), saw.lengths.end());
        ws.saw_lengths = stats_of(len);
        const auto n = static_cast<double>(g.node_count());
        for (auto& x : len) x /= n;
        ws.saw_lengths_normalized = stats_of(len);
        ws.saw_visit_diff = stats_of(visit_diff(saw.visits, rw));
    }
    ws.memories = memories;
    std::sort(ws.memories.begin(), ws.memories.end());
    ws.memories.erase(std::unique(ws.memories.begin(), ws.memories.end()), ws.memories.end());
    for (auto m : ws.memories) {
        const auto lmw = run_lmw(g, m, cfg);
        ws.lmw_diff.push_back(stats_of(visit_diff(lmw, rw)));
    }
    return ws;
}

std::vector<double> extract_features(const Graph& g, const WalkConfig& cfg, const FeatureSetSpec& spec) {
    spec.validate();
    const bool need_saw = spec.include_saw_lengths || spec.include_saw_visits;
    return compute_walk_statistics(g, cfg, spec.lmw_memories, need_saw).select(spec);
}

}  // namespace netwalk
