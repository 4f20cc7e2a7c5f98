#include "qslab/geometry/interval_union.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qslab::geom {

double LengthSpec::operator()(int n) const {
    if (n < 1) throw std::invalid_argument("LengthSpec: index must be >= 1");
    switch (kind) {
        case Kind::Constant: return scale;
        case Kind::InverseSquare: return scale / (double(n) * double(n));
        case Kind::ExpDecay: return scale * std::exp(-double(n));
    }
    return 0.0;
}

num::SignedLog LengthSpec::log_value(int n) const {
    if (n < 1) throw std::invalid_argument("LengthSpec: index must be >= 1");
    const double ls = std::log(scale);
    switch (kind) {
        case Kind::Constant: return num::SignedLog::from_log(ls);
        case Kind::InverseSquare: return num::SignedLog::from_log(ls - 2.0 * std::log(double(n)));
        case Kind::ExpDecay: return num::SignedLog::from_log(ls - double(n));
    }
    return {};
}

std::string LengthSpec::name() const {
    switch (kind) {
        case Kind::Constant: return "constant";
        case Kind::InverseSquare: return "inverse_square";
        case Kind::ExpDecay: return "exp_decay";
    }
    return "?";
}

LengthSpec LengthSpec::parse(const std::string& s) {
    if (s == "constant") return constant();
    if (s == "inverse_square") return inverse_square();
    if (s == "exp_decay") return exp_decay();
    throw std::invalid_argument("unknown length spec: " + s);
}

void IntervalUnion::validate() const {
    for (const Interval& iv : intervals)
        if (!(iv.left < iv.right))
            throw std::invalid_argument("interval must satisfy left < right");
    std::vector<Interval> sorted = intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted[i - 1].right <= sorted[i].left))
            throw std::invalid_argument("intervals must be pairwise disjoint");
}

const std::vector<std::size_t>& IntervalUnion::sorted_order() const {
    if (order_.size() != intervals.size()) {
        order_.resize(intervals.size());
        for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return intervals[a].left < intervals[b].left;
        });
    }
    return order_;
}

std::optional<std::size_t> IntervalUnion::find(double x) const {
    const auto& ord = sorted_order();
    auto it = std::upper_bound(ord.begin(), ord.end(), x, [&](double v, std::size_t i) {
        return v < intervals[i].left;
    });
    if (it == ord.begin()) return std::nullopt;
    --it;
    const Interval& iv = intervals[*it];
    if (x > iv.left && x < iv.right) return *it;
    return std::nullopt;
}

double IntervalUnion::signed_dist(double x) const {
    if (intervals.empty()) throw std::invalid_argument("empty interval union");
    if (auto idx = find(x)) {
        const Interval& iv = intervals[*idx];
        return std::min(x - iv.left, iv.right - x);
    }
    const auto& ord = sorted_order();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : ord) {
        const Interval& iv = intervals[i];
        if (x <= iv.left) {
            best = std::min(best, iv.left - x);
            break;  // sorted scan: later intervals are farther
        }
        best = std::min(best, x - iv.right);
    }
    return -best;
}

IntervalUnion build_na(const LengthSpec& a, int n_max) {
    if (n_max < 1) throw std::invalid_argument("build_na: n_max must be >= 1");
    IntervalUnion u;
    u.intervals.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const double len = a(n);
        if (!(len > 0.0 && len <= 1.0))
            throw std::invalid_argument("build_na: lengths must lie in (0, 1]");
        u.intervals.push_back({double(n), double(n) + len});
    }
    u.validate();
    return u;
}

int cantor_generation(std::size_t n) {
    if (n < 1) throw std::invalid_argument("cantor_generation: 1-based index");
    int m = 0;
    while (n > 0) { n >>= 1; ++m; }
    return m;  // floor(log2 n) + 1
}

IntervalUnion build_cantor_gaps(int depth) {
    if (depth < 1 || depth > 30) throw std::invalid_argument("cantor depth must be in [1, 30]");
    // Gap endpoints are exact triadic rationals: numerator over 3^m, kept
    // in 64-bit integers so the doubles below are correctly rounded.
    struct Gap {
        std::int64_t num_left;
        std::int64_t den_pow;  // generation m: denominator 3^m
    };
    std::vector<Gap> gaps;
    std::vector<double> pow3(depth + 1, 1.0);
    std::vector<std::int64_t> ipow3(depth + 1, 1);
    for (int m = 1; m <= depth; ++m) ipow3[m] = ipow3[m - 1] * 3;
    // Generation m gaps: middle thirds of the 2^(m-1) surviving intervals
    // of step m-1. Surviving intervals of step k have left endpoints with
    // base-3 digits in {0, 2}.
    for (int m = 1; m <= depth; ++m) {
        std::vector<std::int64_t> lefts;  // numerators over 3^(m-1)
        lefts.push_back(0);
        for (int k = 0; k < m - 1; ++k) {
            std::vector<std::int64_t> next;
            next.reserve(lefts.size() * 2);
            for (std::int64_t l : lefts) {
                next.push_back(3 * l);
                next.push_back(3 * l + 2);
            }
            lefts = std::move(next);
        }
        for (std::int64_t l : lefts) gaps.push_back({3 * l + 1, m});
    }
    std::sort(gaps.begin(), gaps.end(), [&](const Gap& a, const Gap& b) {
        if (a.den_pow != b.den_pow) return a.den_pow < b.den_pow;  // longer gaps first
        // compare a.num_left / 3^a.m < b.num_left / 3^b.m with equal m
        return a.num_left < b.num_left;
    });
    IntervalUnion u;
    u.intervals.reserve(gaps.size());
    for (const Gap& g : gaps) {
        const double den = double(ipow3[g.den_pow]);
        u.intervals.push_back({double(g.num_left) / den, double(g.num_left + 1) / den});
    }
    u.validate();
    return u;
}

std::vector<double> cantor_set_points(int depth) {
    if (depth < 1 || depth > 30) throw std::invalid_argument("cantor depth must be in [1, 30]");
    std::vector<std::int64_t> lefts = {0};
    std::int64_t den = 1;
    for (int k = 0; k < depth; ++k) {
        std::vector<std::int64_t> next;
        next.reserve(lefts.size() * 2);
        for (std::int64_t l : lefts) {
            next.push_back(3 * l);
            next.push_back(3 * l + 2);
        }
        lefts = std::move(next);
        den *= 3;
    }
    std::vector<double> pts;
    pts.reserve(lefts.size() * 2);
    for (std::int64_t l : lefts) {
        pts.push_back(double(l) / double(den));
        pts.push_back(double(l + 1) / double(den));
    }
    return pts;
}

}  // namespace qslab::geom
