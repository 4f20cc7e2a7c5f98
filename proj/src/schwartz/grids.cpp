#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qslab/schwartz/sweep.hpp"

namespace qslab::schwartz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHuge = 1e100;  // endpoints beyond this model an unbounded side

/// All powers of two in [2^lo_exp, top], descending from top: top*2^-i.
std::vector<double> geometric_ladder(double top, double bottom) {
    std::vector<double> v;
    for (double x = top; x >= bottom && v.size() < 4096; x *= 0.5) v.push_back(x);
    return v;
}

/// Dyadic interior fractions i/base, i = 1..base-1, plus end layers at
/// relative depths 2^-j, j = 2..deepest.
std::vector<double> relative_fractions(int base, int deepest) {
    std::set<double> s;
    for (int i = 1; i < base; ++i) s.insert(double(i) / base);
    for (int j = 2; j <= deepest; ++j) {
        const double t = std::pow(0.5, j);
        s.insert(t);
        s.insert(1.0 - t);
    }
    return {s.begin(), s.end()};
}

void line_nodes_for_interval(std::vector<double>& out, double lo, double hi, double window,
                             int base, int deepest, double uniform_step) {
    const bool lo_finite = lo > -kHuge;
    const bool hi_finite = hi < kHuge;
    if (lo_finite && hi_finite && (hi - lo) <= 4.0 * window) {
        const double span = hi - lo;
        for (double t : relative_fractions(base, deepest)) out.push_back(lo + span * t);
        return;
    }
    // Unbounded-ish directions: uniform multiples of the fixed step within
    // the window plus geometric ladders off each finite end.
    const double clamp_lo = std::max(lo, -window);
    const double clamp_hi = std::min(hi, window);
    const double tiny = std::pow(0.5, deepest);
    for (double x = std::ceil(clamp_lo / uniform_step) * uniform_step; x <= clamp_hi;
         x += uniform_step) {
        if (x > lo && x < hi) out.push_back(x);
    }
    if (lo_finite) {
        for (double t : geometric_ladder(std::min(window, hi - lo), tiny)) {
            const double x = lo + t;
            if (x < hi) out.push_back(x);
        }
    }
    if (hi_finite) {
        for (double t : geometric_ladder(std::min(window, hi - lo), tiny)) {
            const double x = hi - t;
            if (x > lo) out.push_back(x);
        }
    }
}

}  // namespace

std::vector<LevelGrid<1>> make_grids(const geom::DomainSpec& d, const SamplePlan& plan,
                                     std::integral_constant<int, 1>) {
    const auto* id = std::get_if<geom::IntervalDomain>(&d);
    if (!id) throw std::invalid_argument("1-D grids need an interval domain");
    std::vector<LevelGrid<1>> grids;
    for (int level = 0; level < plan.levels; ++level) {
        LevelGrid<1> g;
        g.level = level;
        g.window = plan.window0 * std::pow(2.0, level);
        const int deepest = plan.layers0 + level;
        const std::size_t idx_window =
            std::size_t(plan.index_window0) << std::size_t(level);
        std::vector<double> xs;
        const std::size_t count = std::min(id->u.size(), idx_window);
        for (std::size_t i = 0; i < count; ++i) {
            const auto& iv = id->u.intervals[i];
            line_nodes_for_interval(xs, iv.left, iv.right, g.window, plan.base_nodes, deepest,
                                    plan.window0 / plan.base_nodes);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        g.nodes.reserve(xs.size());
        for (double x : xs) g.nodes.push_back({x});
        grids.push_back(std::move(g));
    }
    return grids;
}

namespace {

void polar_nodes(std::vector<Vec<2>>& out, geom::Point2 c, const std::vector<double>& radii,
                 int angles) {
    for (double r : radii) {
        if (r == 0.0) {
            out.push_back({c.x, c.y});
            continue;
        }
        for (int i = 0; i < angles; ++i) {
            const double t = 2.0 * kPi * double(i) / angles;
            out.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
        }
    }
}

}  // namespace

std::vector<LevelGrid<2>> make_grids(const geom::DomainSpec& d, const SamplePlan& plan,
                                     std::integral_constant<int, 2>) {
    std::vector<LevelGrid<2>> grids;
    for (int level = 0; level < plan.levels; ++level) {
        LevelGrid<2> g;
        g.level = level;
        g.window = plan.window0 * std::pow(2.0, level);
        const int deepest = plan.layers0 + level;
        const double tiny = std::pow(0.5, deepest);
        const int angles = std::max(8, plan.base_nodes) << level;
        auto& nodes = g.nodes;

        std::visit(
            [&](const auto& dom) {
                using T = std::decay_t<decltype(dom)>;
                if constexpr (std::is_same_v<T, geom::Disc>) {
                    std::vector<double> radii = {0.0};
                    for (int j = 1; j <= deepest; ++j) radii.push_back(1.0 - std::pow(0.5, j));
                    polar_nodes(nodes, {0.0, 0.0}, radii, angles);
                } else if constexpr (std::is_same_v<T, geom::ExteriorDisc>) {
                    std::vector<double> radii;
                    for (int j = 1; j <= deepest; ++j) radii.push_back(1.0 + std::pow(0.5, j));
                    for (double r : geometric_ladder(g.window, 2.0)) radii.push_back(r);
                    polar_nodes(nodes, {0.0, 0.0}, radii, angles);
                } else if constexpr (std::is_same_v<T, geom::HalfPlane>) {
                    const double step = plan.window0 / plan.base_nodes;
                    for (double y : geometric_ladder(g.window, tiny))
                        for (double x = -g.window; x <= g.window; x += step)
                            nodes.push_back({x, y});
                } else if constexpr (std::is_same_v<T, geom::Strip>) {
                    std::vector<double> xi = geometric_ladder(g.window, tiny);
                    const double step = std::max(plan.window0 / plan.base_nodes, 0.25);
                    for (double x = step; x <= g.window; x += step) xi.push_back(x);
                    for (double t : relative_fractions(plan.base_nodes, deepest))
                        for (double x : xi)
                            nodes.push_back({dom.x_min + x, dom.height * t});
                } else if constexpr (std::is_same_v<T, geom::CuspDomain>) {
                    std::vector<double> us = geometric_ladder(g.window, tiny);
                    const double step = 0.5;
                    for (double u = step; u <= g.window; u += step) us.push_back(u);
                    const auto ts = relative_fractions(plan.base_nodes, deepest);
                    for (double u : us) {
                        const double top = std::exp(-dom.eval_p(u));
                        for (double t : ts) nodes.push_back({u, top * t});
                    }
                } else if constexpr (std::is_same_v<T, geom::NazarovDomain>) {
                    for (int n = 1; n <= dom.n_max; ++n) {
                        const double rn = dom.disc_radius(n);
                        std::vector<double> radii = {0.0};
                        for (int i = 1; i < plan.base_nodes; ++i)
                            radii.push_back(rn * double(i) / plan.base_nodes);
                        for (int j = 1; j <= deepest; ++j)
                            radii.push_back(rn * (1.0 - std::pow(0.5, j)));
                        polar_nodes(nodes, {double(n), 0.0}, radii, angles);
                        // strip nodes: y = 0 spine plus representable wall layers
                        const double hh = std::exp(dom.log_half_height(n));
                        std::set<double> ys = {0.0};
                        for (int j = 1; j <= deepest; ++j) {
                            const double y = hh * (1.0 - std::pow(0.5, j));
                            ys.insert(y);
                            ys.insert(-y);
                        }
                        for (double t : relative_fractions(plan.base_nodes, deepest))
                            for (double y : ys) nodes.push_back({double(n) + t, y});
                    }
                } else if constexpr (std::is_same_v<T, geom::PolygonDomain> ||
                                     std::is_same_v<T, geom::SlitPlane>) {
                    // box fill over the figure's bounding box, membership-filtered
                    const auto& curve = [&]() -> const geom::ClosedCurve& {
                        if constexpr (std::is_same_v<T, geom::PolygonDomain>)
                            return dom.boundary;
                        else
                            return dom.slit;
                    }();
                    double lo_x = curve.vertices[0].x, hi_x = lo_x;
                    double lo_y = curve.vertices[0].y, hi_y = lo_y;
                    for (auto p : curve.vertices) {
                        lo_x = std::min(lo_x, p.x); hi_x = std::max(hi_x, p.x);
                        lo_y = std::min(lo_y, p.y); hi_y = std::max(hi_y, p.y);
                    }
                    const double margin = std::is_same_v<T, geom::SlitPlane> ? g.window : 0.0;
                    const int nb = plan.base_nodes << std::min(level, 4);
                    const auto oracle = geom::make_exact_oracle(d);
                    for (int ix = 0; ix <= nb; ++ix) {
                        for (int iy = 0; iy <= nb; ++iy) {
                            const double x =
                                lo_x - margin + (hi_x - lo_x + 2 * margin) * double(ix) / nb;
                            const double y =
                                lo_y - margin + (hi_y - lo_y + 2 * margin) * double(iy) / nb;
                            if (oracle->signed_dist({x, y}) > 0.0) nodes.push_back({x, y});
                        }
                    }
                } else {
                    static_assert(std::is_same_v<T, geom::IntervalDomain>);
                    throw std::invalid_argument("interval domains take 1-D grids");
                }
            },
            d);
        grids.push_back(std::move(g));
    }
    return grids;
}

}  // namespace qslab::schwartz
