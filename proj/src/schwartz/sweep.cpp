#include <cmath>
#include <map>

#include "qslab/schwartz/sweep.hpp"

namespace qslab::schwartz {

namespace {

template <int N>
SignedLog monomial_weight(const Vec<N>& x, const MultiIndex<N>& l) {
    SignedLog w = SignedLog::from_log(0.0);  // one
    for (int i = 0; i < N; ++i) w = w * SignedLog::of(x[i]).pow_int(l[i]);
    return w.abs();
}

template <int N>
geom::Point2 as_point(const Vec<N>& x) {
    if constexpr (N == 2) return {x[0], x[1]};
    else return {x[0], 0.0};
}

}  // namespace

template <int N>
SeminormReport<N> seminorm(const TestFunction<N>& f, const MultiIndex<N>& k,
                           const MultiIndex<N>& l, const SamplePlan& plan) {
    SeminormReport<N> rep;
    rep.function = f.name;
    rep.k = k;
    rep.l = l;
    rep.seed = plan.seed;
    rep.log_scale = f.log_mode;
    const auto grids = make_grids<N>(f.domain, plan);
    SignedLog sup;
    Vec<N> argmax{};
    for (const auto& g : grids) {
        for (const auto& x : g.nodes) {
            if (f.oracle && !(f.oracle->signed_log_dist(as_point<N>(x)).sign > 0)) continue;
            const auto dv = derivative<N>(f, k, x);
            if (dv.step_warning) ++rep.fd_warnings;
            const SignedLog cand = dv.value.abs() * monomial_weight<N>(x, l);
            if (cand > sup) {
                sup = cand;
                argmax = x;
            }
        }
        rep.trend.push_back(sup);
        rep.node_counts.push_back(g.nodes.size());
        rep.windows.push_back(g.window);
    }
    rep.sup = sup;
    rep.argmax = argmax;
    return rep;
}

template SeminormReport<1> seminorm<1>(const TestFunction1&, const MultiIndex<1>&,
                                       const MultiIndex<1>&, const SamplePlan&);
template SeminormReport<2> seminorm<2>(const TestFunction2&, const MultiIndex<2>&,
                                       const MultiIndex<2>&, const SamplePlan&);

template <int N>
DecayReport<N> decay_ratio(const TestFunction<N>& f, const geom::DistanceOracle& oracle, int m,
                           const SamplePlan& plan) {
    if (m > 8) throw std::invalid_argument("decay_ratio: m must be <= 8");
    DecayReport<N> rep;
    rep.function = f.name;
    rep.m = m;
    rep.seed = plan.seed;
    rep.log_scale = true;
    const auto grids = make_grids<N>(f.domain, plan);
    SignedLog sup;
    Vec<N> argmax{};
    for (const auto& g : grids) {
        for (const auto& x : g.nodes) {
            const SignedLog d = oracle.signed_log_dist(as_point<N>(x));
            if (!(d.sign > 0)) continue;
            const SignedLog cand = f.value(x).abs() / d.pow_int(m);
            if (cand > sup) {
                sup = cand;
                argmax = x;
            }
        }
        rep.trend.push_back(sup);
        rep.node_counts.push_back(g.nodes.size());
        rep.windows.push_back(g.window);
    }
    rep.sup = sup;
    rep.argmax = argmax;
    return rep;
}

template DecayReport<1> decay_ratio<1>(const TestFunction1&, const geom::DistanceOracle&, int,
                                       const SamplePlan&);
template DecayReport<2> decay_ratio<2>(const TestFunction2&, const geom::DistanceOracle&, int,
                                       const SamplePlan&);

Trend classify_trend(const std::vector<SignedLog>& trend) {
    if (trend.size() < 2) return Trend::Inconclusive;
    bool all_zero = true;
    for (const auto& t : trend) all_zero = all_zero && t.sign == 0;
    if (all_zero) return Trend::Stable;
    bool stable = true, geometric = true;
    for (std::size_t i = 0; i + 1 < trend.size(); ++i) {
        const SignedLog &a = trend[i], &b = trend[i + 1];
        if (a.sign == 0 && b.sign == 0) { geometric = false; continue; }
        if (a.sign == 0) { stable = false; continue; }  // 0 -> positive jump
        const double log_ratio = b.ln - a.ln;  // >= 0 by monotone refinement
        if (!(log_ratio <= std::log(1.01))) stable = false;
        if (!(log_ratio > std::log(2.0))) geometric = false;
    }
    if (stable) return Trend::Stable;
    if (geometric) return Trend::Geometric;
    return Trend::Inconclusive;
}

std::string trend_name(Trend t) {
    switch (t) {
        case Trend::Stable: return "stable";
        case Trend::Geometric: return "geometric";
        case Trend::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace qslab::schwartz
