#include "qslab/geometry/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qslab/geometry/nazarov_oracle.hpp"
#include "qslab/num/roots.hpp"

namespace qslab::geom {

namespace {

constexpr double kPi = std::numbers::pi;

double poly_eval(const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
    return acc;
}

double poly_deriv_eval(const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * u + double(i) * c[i];
    return acc;
}

}  // namespace

void CuspDomain::validate() const {
    if (p.size() < 2) throw std::invalid_argument("cusp polynomial must be non-constant");
    if (!(p.back() > 0.0))
        throw std::invalid_argument("cusp polynomial needs a positive leading coefficient");
}

double CuspDomain::eval_p(double u) const { return poly_eval(p, u); }
double CuspDomain::eval_dp(double u) const { return poly_deriv_eval(p, u); }

int ambient_dim(const DomainSpec& d) {
    return std::holds_alternative<IntervalDomain>(d) ? 1 : 2;
}

DomainSpec build_nazarov_domain(int n_max) {
    if (n_max < 1 || n_max > 40)
        throw std::invalid_argument("nazarov n_max must be in [1, 40]");
    return NazarovDomain{n_max};
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

namespace {

/// Winding-free point-in-polygon via crossing number.
bool in_polygon(const ClosedCurve& poly, Point2 p) {
    bool inside = false;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = poly.vertices[i];
        const Point2 b = poly.vertices[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xc) inside = !inside;
        }
    }
    return inside;
}

double dist_to_polyline(const ClosedCurve& c, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = c.vertices.size();
    const std::size_t edges = c.closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i)
        best = std::min(best, dist_to_segment(p, c.vertices[i], c.vertices[(i + 1) % n]));
    return best;
}

}  // namespace

bool contains(const DomainSpec& d, Point2 p) {
    return std::visit(
        [&](const auto& dom) -> bool {
            using T = std::decay_t<decltype(dom)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return norm2(p) < 1.0;
            } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
                return norm2(p) > 1.0;
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                return p.y > 0.0;
            } else if constexpr (std::is_same_v<T, Strip>) {
                return p.x > dom.x_min && p.y > 0.0 && p.y < dom.height;
            } else if constexpr (std::is_same_v<T, CuspDomain>) {
                return p.x > 0.0 && p.y > 0.0 && p.y < std::exp(-dom.eval_p(p.x));
            } else if constexpr (std::is_same_v<T, NazarovDomain>) {
                return nazarov_contains(dom, p);
            } else if constexpr (std::is_same_v<T, PolygonDomain>) {
                return in_polygon(dom.boundary, p) && dist_to_polyline(dom.boundary, p) > 0.0;
            } else if constexpr (std::is_same_v<T, SlitPlane>) {
                return dist_to_polyline(dom.slit, p) > 0.0;
            } else {
                static_assert(std::is_same_v<T, IntervalDomain>);
                return dom.u.find(p.x).has_value();
            }
        },
        d);
}

// ---------------------------------------------------------------------------
// Exact oracles
// ---------------------------------------------------------------------------

namespace {

class FnOracle final : public DistanceOracle {
public:
    using Fn = std::function<SignedLog(Point2)>;
    FnOracle(Fn f, Mode m, double res = 0.0) : f_(std::move(f)), mode_(m), res_(res) {}
    Mode mode() const override { return mode_; }
    double resolution() const override { return res_; }
    SignedLog signed_log_dist(Point2 p) const override { return f_(p); }

private:
    Fn f_;
    Mode mode_;
    double res_;
};

SignedLog sl(double v) { return SignedLog::of(v); }

/// Distance from an interior point of the cusp domain to the graph
/// v = exp(-p(u)), u >= 0. Coarse scan plus golden-section refinement.
double cusp_curve_distance(const CuspDomain& dom, Point2 q) {
    const auto f = [&](double u) { return std::exp(-dom.eval_p(u)); };
    const auto d2 = [&](double u) {
        const double du = u - q.x, dv = f(u) - q.y;
        return du * du + dv * dv;
    };
    // Where the graph slope is below ~1e-9 the vertical gap is the exact
    // distance to double precision.
    const double slope_here = std::abs(dom.eval_dp(q.x)) * f(q.x);
    if (q.x > 1.0 && slope_here < 1e-9) return std::abs(f(q.x) - q.y);
    const double lo = std::max(0.0, q.x - 3.0);
    const double hi = q.x + 3.0;
    const int kScan = 600;
    double best_u = lo, best = d2(lo);
    for (int i = 1; i <= kScan; ++i) {
        const double u = lo + (hi - lo) * double(i) / kScan;
        const double v = d2(u);
        if (v < best) { best = v; best_u = u; }
    }
    double a = std::max(lo, best_u - (hi - lo) / kScan);
    double b = std::min(hi, best_u + (hi - lo) / kScan);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = d2(c1), f2 = d2(c2);
    for (int it = 0; it < 90; ++it) {
        if (f1 < f2) {
            b = c2; c2 = c1; f2 = f1;
            c1 = b - gr * (b - a); f1 = d2(c1);
        } else {
            a = c1; c1 = c2; f1 = f2;
            c2 = a + gr * (b - a); f2 = d2(c2);
        }
    }
    return std::sqrt(std::min(f1, f2));
}

SignedLog cusp_signed_dist(const CuspDomain& dom, Point2 p) {
    const double top0 = std::exp(-dom.eval_p(0.0));
    if (contains(DomainSpec{dom}, p)) {
        const double d_left = p.x;                  // wall u = 0
        const double d_bottom = p.y;                // wall v = 0
        const double d_top = cusp_curve_distance(dom, p);
        return sl(std::min({d_left, d_bottom, d_top}));
    }
    // Exterior: distance to the closed region.
    double best = std::numeric_limits<double>::infinity();
    // left wall segment {0} x [0, top0]
    best = std::min(best, dist_to_segment(p, {0.0, 0.0}, {0.0, top0}));
    // bottom ray y = 0, x >= 0
    if (p.x >= 0.0) best = std::min(best, std::abs(p.y));
    // top curve
    if (p.x >= -3.0) best = std::min(best, cusp_curve_distance(dom, p));
    return sl(-best);
}

SignedLog strip_signed_dist(const Strip& s, Point2 p) {
    // Convex domain: intersection of three half-planes.
    const double dx = p.x - s.x_min;
    const double dy0 = p.y;
    const double dy1 = s.height - p.y;
    const double inside = std::min({dx, dy0, dy1});
    if (inside >= 0.0) return sl(inside);
    const double ex = std::max(-dx, 0.0);
    const double ey = std::max(std::max(-dy0, -dy1), 0.0);
    return sl(-std::hypot(ex, ey));
}

SignedLog polygon_signed_dist(const PolygonDomain& dom, Point2 p) {
    const double d = dist_to_polyline(dom.boundary, p);
    return sl(in_polygon(dom.boundary, p) ? d : -d);
}

}  // namespace

OraclePtr make_exact_oracle(const DomainSpec& d) {
    return std::visit(
        [&](const auto& dom) -> OraclePtr {
            using T = std::decay_t<std::decay_t<decltype(dom)>>;
            using M = DistanceOracle::Mode;
            if constexpr (std::is_same_v<T, Disc>) {
                return std::make_shared<FnOracle>(
                    [](Point2 p) { return sl(1.0 - abs(p)); }, M::Exact);
            } else if constexpr (std::is_same_v<T, ExteriorDisc>) {
                return std::make_shared<FnOracle>(
                    [](Point2 p) { return sl(abs(p) - 1.0); }, M::Exact);
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                return std::make_shared<FnOracle>([](Point2 p) { return sl(p.y); }, M::Exact);
            } else if constexpr (std::is_same_v<T, Strip>) {
                Strip s = dom;
                return std::make_shared<FnOracle>(
                    [s](Point2 p) { return strip_signed_dist(s, p); }, M::Exact);
            } else if constexpr (std::is_same_v<T, CuspDomain>) {
                CuspDomain c = dom;
                c.validate();
                return std::make_shared<FnOracle>(
                    [c](Point2 p) { return cusp_signed_dist(c, p); }, M::Exact);
            } else if constexpr (std::is_same_v<T, NazarovDomain>) {
                return make_nazarov_oracle(dom);
            } else if constexpr (std::is_same_v<T, PolygonDomain>) {
                PolygonDomain pd = dom;
                pd.boundary.validate();
                return std::make_shared<FnOracle>(
                    [pd](Point2 p) { return polygon_signed_dist(pd, p); }, M::Exact);
            } else if constexpr (std::is_same_v<T, SlitPlane>) {
                SlitPlane sp = dom;
                return std::make_shared<FnOracle>(
                    [sp](Point2 p) { return sl(dist_to_polyline(sp.slit, p)); }, M::Exact);
            } else {
                static_assert(std::is_same_v<T, IntervalDomain>);
                IntervalDomain id = dom;
                id.u.validate();
                return std::make_shared<FnOracle>(
                    [id](Point2 p) { return sl(id.u.signed_dist(p.x)); }, M::Exact);
            }
        },
        d);
}

OraclePtr min_oracle(OraclePtr a, OraclePtr b) {
    auto f = [a, b](Point2 p) {
        const SignedLog da = a->signed_log_dist(p);
        const SignedLog db = b->signed_log_dist(p);
        return (da < db) ? da : db;
    };
    const auto m = (a->mode() == DistanceOracle::Mode::Exact &&
                    b->mode() == DistanceOracle::Mode::Exact)
                       ? DistanceOracle::Mode::Exact
                       : DistanceOracle::Mode::Sampled;
    return std::make_shared<FnOracle>(f, m, std::max(a->resolution(), b->resolution()));
}

// ---------------------------------------------------------------------------
// Boundary discretization and the sampled oracle
// ---------------------------------------------------------------------------

std::vector<Point2> boundary_points(const DomainSpec& d, double h) {
    if (h <= 0.0) throw std::invalid_argument("boundary_points: h must be > 0");
    std::vector<Point2> pts;
    auto circle = [&](Point2 c, double r) {
        const int n = std::max(8, int(std::ceil(2.0 * kPi * r / h)));
        for (int i = 0; i < n; ++i) {
            const double t = 2.0 * kPi * double(i) / n;
            pts.emplace_back(c.x + r * std::cos(t), c.y + r * std::sin(t));
        }
    };
    auto segment = [&](Point2 a, Point2 b) {
        const double len = dist(a, b);
        const int n = std::max(1, int(std::ceil(len / h)));
        for (int i = 0; i <= n; ++i) pts.push_back(a + (double(i) / n) * (b - a));
    };
    std::visit(
        [&](const auto& dom) {
            using T = std::decay_t<decltype(dom)>;
            if constexpr (std::is_same_v<T, Disc> || std::is_same_v<T, ExteriorDisc>) {
                circle({0.0, 0.0}, 1.0);
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                segment({-64.0, 0.0}, {64.0, 0.0});
            } else if constexpr (std::is_same_v<T, Strip>) {
                const double w = 64.0;
                segment({dom.x_min, 0.0}, {dom.x_min, dom.height});
                segment({dom.x_min, 0.0}, {dom.x_min + w, 0.0});
                segment({dom.x_min, dom.height}, {dom.x_min + w, dom.height});
            } else if constexpr (std::is_same_v<T, CuspDomain>) {
                const double top0 = std::exp(-dom.eval_p(0.0));
                segment({0.0, 0.0}, {0.0, top0});
                const double w = 48.0;
                segment({0.0, 0.0}, {w, 0.0});
                double u = 0.0;
                while (u < w) {
                    pts.emplace_back(u, std::exp(-dom.eval_p(u)));
                    const double slope = std::abs(dom.eval_dp(u)) * std::exp(-dom.eval_p(u));
                    u += h / std::max(1.0, std::hypot(1.0, slope));
                }
            } else if constexpr (std::is_same_v<T, NazarovDomain>) {
                for (Point2 p : nazarov_boundary_points(dom, h)) pts.push_back(p);
            } else if constexpr (std::is_same_v<T, PolygonDomain>) {
                for (Point2 p : sample_curve_points(dom.boundary, h)) pts.push_back(p);
            } else if constexpr (std::is_same_v<T, SlitPlane>) {
                for (Point2 p : sample_curve_points(dom.slit, h)) pts.push_back(p);
            } else {
                static_assert(std::is_same_v<T, IntervalDomain>);
                for (const Interval& iv : dom.u.intervals) {
                    pts.emplace_back(iv.left, 0.0);
                    pts.emplace_back(iv.right, 0.0);
                }
            }
        },
        d);
    // Boundary pieces swallowed by another component of the same domain are
    // not boundary; membership is exact, so filter. The chain-of-discs
    // sampler already filtered component-aware (its wall heights can round
    // to interior spine points).
    if (std::holds_alternative<NazarovDomain>(d)) return pts;
    std::vector<Point2> kept;
    kept.reserve(pts.size());
    for (Point2 p : pts)
        if (!contains(d, p)) kept.push_back(p);
    return kept;
}

namespace {

/// Brute-force nearest distance against a point cloud with a uniform grid
/// index so sweeps stay usable.
class SampledOracle final : public DistanceOracle {
public:
    SampledOracle(const DomainSpec& d, double h) : domain_(d), h_(h) {
        cloud_ = boundary_points(d, h);
        if (cloud_.empty()) throw std::invalid_argument("sampled oracle: empty boundary cloud");
        double lo_x = cloud_[0].x, hi_x = cloud_[0].x, lo_y = cloud_[0].y, hi_y = cloud_[0].y;
        for (Point2 p : cloud_) {
            lo_x = std::min(lo_x, p.x); hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y); hi_y = std::max(hi_y, p.y);
        }
        lo_ = {lo_x, lo_y};
        cell_ = std::max({(hi_x - lo_x) / 128.0, (hi_y - lo_y) / 128.0, h});
        nx_ = int((hi_x - lo_x) / cell_) + 1;
        ny_ = int((hi_y - lo_y) / cell_) + 1;
        buckets_.resize(std::size_t(nx_) * std::size_t(ny_));
        for (std::size_t i = 0; i < cloud_.size(); ++i)
            buckets_[bucket_of(cloud_[i])].push_back(i);
    }

    Mode mode() const override { return Mode::Sampled; }
    double resolution() const override { return h_; }

    SignedLog signed_log_dist(Point2 p) const override {
        double best2 = std::numeric_limits<double>::infinity();
        // ring search over buckets
        const int bx = std::clamp(int((p.x - lo_.x) / cell_), 0, nx_ - 1);
        const int by = std::clamp(int((p.y - lo_.y) / cell_), 0, ny_ - 1);
        for (int ring = 0; ring < std::max(nx_, ny_); ++ring) {
            bool any = false;
            for (int ix = bx - ring; ix <= bx + ring; ++ix) {
                for (int iy = by - ring; iy <= by + ring; ++iy) {
                    if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) continue;
                    if (std::max(std::abs(ix - bx), std::abs(iy - by)) != ring) continue;
                    any = true;
                    for (std::size_t idx : buckets_[std::size_t(iy) * nx_ + ix])
                        best2 = std::min(best2, dist2(p, cloud_[idx]));
                }
            }
            if (std::isfinite(best2)) {
                const double safe = double(ring) * cell_;
                if (best2 <= safe * safe) break;
            }
            if (!any && ring > std::max(nx_, ny_)) break;
        }
        const double d = std::sqrt(best2);
        return SignedLog::of(contains(domain_, p) ? d : -d);
    }

private:
    std::size_t bucket_of(Point2 p) const {
        const int ix = std::clamp(int((p.x - lo_.x) / cell_), 0, nx_ - 1);
        const int iy = std::clamp(int((p.y - lo_.y) / cell_), 0, ny_ - 1);
        return std::size_t(iy) * nx_ + ix;
    }

    DomainSpec domain_;
    double h_;
    std::vector<Point2> cloud_;
    std::vector<std::vector<std::size_t>> buckets_;
    Point2 lo_;
    double cell_ = 1.0;
    int nx_ = 1, ny_ = 1;
};

}  // namespace

OraclePtr make_sampled_oracle(const DomainSpec& d, double h) {
    return std::make_shared<SampledOracle>(d, h);
}

}  // namespace qslab::geom
