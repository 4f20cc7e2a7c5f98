#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qslab/schwartz/test_function.hpp"

namespace qslab::schwartz {

/// Grid levels are nested by construction: refining a level only adds
/// nodes (deeper boundary layers, doubled windows, denser dyadic fill),
/// so sampled suprema are monotone non-decreasing across levels.
struct SamplePlan {
    int levels = 3;
    double window0 = 8.0;    // initial extent for unbounded directions; doubles per level
    int index_window0 = 50;  // initial interval-index prefix for countable unions
    int base_nodes = 16;     // dyadic fill nodes per bounded direction
    int layers0 = 12;        // boundary layers at distances 2^-j, j = 1..layers0+level
    std::uint64_t seed = 0;  // recorded in every report
};

template <int N>
struct LevelGrid {
    std::vector<Vec<N>> nodes;
    double window = 0.0;
    int level = 0;
};

std::vector<LevelGrid<1>> make_grids(const geom::DomainSpec& d, const SamplePlan& plan,
                                     std::integral_constant<int, 1>);
std::vector<LevelGrid<2>> make_grids(const geom::DomainSpec& d, const SamplePlan& plan,
                                     std::integral_constant<int, 2>);

template <int N>
std::vector<LevelGrid<N>> make_grids(const geom::DomainSpec& d, const SamplePlan& plan) {
    return make_grids(d, plan, std::integral_constant<int, N>{});
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

template <int N>
struct SupReport {
    std::string function;
    SignedLog sup;
    Vec<N> argmax{};
    std::vector<SignedLog> trend;        // sup per refinement level
    std::vector<std::size_t> node_counts;
    std::vector<double> windows;
    std::uint64_t seed = 0;
    int fd_warnings = 0;
    bool log_scale = false;
};

template <int N>
struct SeminormReport : SupReport<N> {
    MultiIndex<N> k{};
    MultiIndex<N> l{};
};

template <int N>
struct DecayReport : SupReport<N> {
    int m = 0;
};

/// Sampled supremum of |x^l f^(k)(x)| with boundary-refined layering and
/// a refinement trend over the plan's levels. Argmax ties break toward
/// the smallest node index, so sweeps are order-independent.
template <int N>
SeminormReport<N> seminorm(const TestFunction<N>& f, const MultiIndex<N>& k,
                           const MultiIndex<N>& l, const SamplePlan& plan);

/// Sampled supremum of |f(x)| / dist(x, boundary)^m in log space.
template <int N>
DecayReport<N> decay_ratio(const TestFunction<N>& f, const geom::DistanceOracle& oracle, int m,
                           const SamplePlan& plan);

template <int N>
DecayReport<N> decay_ratio(const TestFunction<N>& f, int m, const SamplePlan& plan) {
    return decay_ratio<N>(f, *f.oracle, m, plan);
}

// ---------------------------------------------------------------------------
// Trend classification (shared with verify)
// ---------------------------------------------------------------------------

enum class Trend { Stable, Geometric, Inconclusive };

/// Stable: < 1% growth per refinement level across the trend.
/// Geometric: > 2x growth per level, sustained across the trend.
Trend classify_trend(const std::vector<SignedLog>& trend);

std::string trend_name(Trend t);

}  // namespace qslab::schwartz
