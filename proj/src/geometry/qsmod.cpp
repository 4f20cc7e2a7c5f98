#include "qslab/geometry/qsmod.hpp"

#include <algorithm>
#include <cmath>

#include "qslab/num/rng.hpp"

namespace qslab::geom {

namespace {

/// Rejection-sample a point of the domain from its bounding window.
Point2 sample_point(const DomainSpec& d, num::Rng& rng) {
    // window heuristics per variant
    double lo_x = -1.0, hi_x = 1.0, lo_y = -1.0, hi_y = 1.0;
    if (std::holds_alternative<Strip>(d)) {
        const auto& s = std::get<Strip>(d);
        lo_x = s.x_min;
        hi_x = s.x_min + 16.0;
        lo_y = 0.0;
        hi_y = s.height;
    } else if (std::holds_alternative<HalfPlane>(d)) {
        lo_x = -8.0; hi_x = 8.0; lo_y = 0.0; hi_y = 8.0;
    } else if (std::holds_alternative<ExteriorDisc>(d)) {
        lo_x = -8.0; hi_x = 8.0; lo_y = -8.0; hi_y = 8.0;
    } else if (std::holds_alternative<NazarovDomain>(d)) {
        const auto& nz = std::get<NazarovDomain>(d);
        lo_x = 0.0; hi_x = double(nz.n_max) + 1.0; lo_y = -1.0; hi_y = 1.0;
    }
    for (int tries = 0; tries < 4096; ++tries) {
        const Point2 p{rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y)};
        if (contains(d, p)) return p;
    }
    throw std::runtime_error("quasisymmetry sampler: domain too thin for rejection sampling");
}

void bin_triple(QsModulusTable& table, double log_t_lo, double log_t_hi, Point2 x, Point2 y,
                Point2 z, Point2 fx, Point2 fy, Point2 fz) {
    const double txy = dist(x, y);
    const double txz = dist(x, z);
    if (txy == 0.0 || txz == 0.0 || dist(y, z) == 0.0) {
        ++table.skipped;
        return;
    }
    const double t = txy / txz;
    const double ratio = dist(fx, fy) / dist(fx, fz);
    const double lt = std::log(t);
    const int nb = int(table.bins.size());
    int idx = int(std::floor((lt - log_t_lo) / (log_t_hi - log_t_lo) * nb));
    idx = std::clamp(idx, 0, nb - 1);
    QsBin& bin = table.bins[idx];
    if (ratio > bin.max_ratio) bin.max_ratio = ratio;
    if (t > bin.max_t) bin.max_t = t;
    ++bin.count;
    ++table.triples;
}

QsModulusTable make_table(int n_bins, double log_t_lo, double log_t_hi) {
    QsModulusTable table;
    table.bins.resize(n_bins);
    for (int i = 0; i < n_bins; ++i) {
        table.bins[i].t_lo = std::exp(log_t_lo + (log_t_hi - log_t_lo) * i / n_bins);
        table.bins[i].t_hi = std::exp(log_t_lo + (log_t_hi - log_t_lo) * (i + 1) / n_bins);
    }
    return table;
}

constexpr double kLogTLo = -6.0;
constexpr double kLogTHi = 6.0;

}  // namespace

QsModulusTable sample_quasisymmetry_modulus(const maps::PlaneMap& map, const DomainSpec& domain,
                                            const QsPlan& plan) {
    num::Rng rng(plan.seed);
    std::vector<Point2> pts;
    pts.reserve(plan.n_points);
    for (std::size_t i = 0; i < plan.n_points; ++i) pts.push_back(sample_point(domain, rng));
    std::vector<Point2> img;
    img.reserve(pts.size());
    for (const Point2& p : pts) img.push_back(Point2(map.eval(p.cx())));

    QsModulusTable table = make_table(plan.n_bins, kLogTLo, kLogTHi);
    table.seed = plan.seed;
    const std::size_t n = pts.size();
    for (std::size_t trip = 0; trip < plan.n_triples; ++trip) {
        const std::size_t i = rng.below(n), j = rng.below(n), k = rng.below(n);
        if (i == j || i == k || j == k) {
            ++table.skipped;
            continue;
        }
        bin_triple(table, kLogTLo, kLogTHi, pts[i], pts[j], pts[k], img[i], img[j], img[k]);
    }
    return table;
}

QsModulusTable quasisymmetry_modulus_exhaustive(const maps::PlaneMap& map,
                                                const std::vector<Point2>& points, int n_bins) {
    std::vector<Point2> img;
    img.reserve(points.size());
    for (const Point2& p : points) img.push_back(Point2(map.eval(p.cx())));
    QsModulusTable table = make_table(n_bins, kLogTLo, kLogTHi);
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || i == k || j == k) continue;
                bin_triple(table, kLogTLo, kLogTHi, points[i], points[j], points[k], img[i],
                           img[j], img[k]);
            }
    return table;
}

}  // namespace qslab::geom
