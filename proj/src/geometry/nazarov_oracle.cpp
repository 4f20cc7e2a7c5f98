#include "qslab/geometry/nazarov_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qslab::geom {

namespace {

constexpr double kPi = std::numbers::pi;

struct AngleCut {
    double lo;
    double hi;
};  // closed interval of angles in [-pi, pi]; degenerate cuts are kept

double log_abs(double y) {
    if (y == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(y));
}

bool in_disc(const NazarovDomain& dom, int n, Point2 p) {
    const double r = dom.disc_radius(n);
    return dist2(p, {double(n), 0.0}) < r * r;
}

bool in_strip(const NazarovDomain& dom, int n, Point2 p) {
    if (!(p.x > double(n) && p.x < double(n) + 1.0)) return false;
    return log_abs(p.y) < dom.log_half_height(n);
}

/// Half-width of the angular cut that a strip of log-half-height lh makes
/// on a circle of radius r: asin(exp(lh)/r), flushed to an exact 0 (a
/// degenerate, still-covering cut) once the ratio underflows.
double strip_cut_halfwidth(double lh, double r) {
    const double t = lh - std::log(r);
    if (t < -700.0) return 0.0;
    return std::asin(std::min(1.0, std::exp(t)));
}

void merge_cuts(std::vector<AngleCut>& cuts) {
    if (cuts.empty()) return;
    std::sort(cuts.begin(), cuts.end(), [](const AngleCut& a, const AngleCut& b) {
        return a.lo < b.lo;
    });
    std::vector<AngleCut> merged;
    merged.push_back(cuts[0]);
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (cuts[i].lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, cuts[i].hi);
        } else {
            merged.push_back(cuts[i]);
        }
    }
    cuts = std::move(merged);
}

class NazarovOracle final : public DistanceOracle {
public:
    explicit NazarovOracle(NazarovDomain dom) : dom_(dom) {
        cuts_.resize(dom_.n_max + 1);
        for (int m = 1; m <= dom_.n_max; ++m) cuts_[m] = circle_cuts(m);
    }

    Mode mode() const override { return Mode::Exact; }

    SignedLog signed_log_dist(Point2 p) const override {
        if (!nazarov_contains(dom_, p)) return SignedLog::of(-exterior_distance(p));
        SignedLog best;  // zero; replaced by first candidate
        bool have = false;
        auto consider = [&](SignedLog d) {
            if (!have || d < best) { best = d; have = true; }
        };
        for (int m = 1; m <= dom_.n_max; ++m) circle_candidates(m, p, consider);
        for (int n = 1; n <= dom_.n_max; ++n) strip_candidates(n, p, consider);
        return best;
    }

private:
    /// Angular intervals of circle m swallowed by neighbouring discs or by
    /// the two adjacent strips.
    std::vector<AngleCut> circle_cuts(int m) const {
        std::vector<AngleCut> cuts;
        const double rm = dom_.disc_radius(m);
        // neighbouring discs (centre distance 1)
        for (int k : {m - 1, m + 1}) {
            if (k < 1 || k > dom_.n_max) continue;
            const double rk = dom_.disc_radius(k);
            if (rm + rk <= 1.0) continue;  // disjoint
            const double ca = (1.0 + rm * rm - rk * rk) / (2.0 * rm);
            const double alpha = std::acos(std::clamp(ca, -1.0, 1.0));
            const double dir = (k > m) ? 0.0 : kPi;
            if (dir == 0.0) {
                cuts.push_back({-alpha, alpha});
            } else {
                cuts.push_back({kPi - alpha, kPi});
                cuts.push_back({-kPi, -kPi + alpha});
            }
        }
        // adjacent strips: strip m covers angles near 0, strip m-1 near pi
        const double s0 = strip_cut_halfwidth(dom_.log_half_height(m), rm);
        cuts.push_back({-s0, s0});
        if (m - 1 >= 1) {
            const double s1 = strip_cut_halfwidth(dom_.log_half_height(m - 1), rm);
            cuts.push_back({kPi - s1, kPi});
            cuts.push_back({-kPi, -kPi + s1});
        }
        merge_cuts(cuts);
        return cuts;
    }

    template <class F>
    void circle_candidates(int m, Point2 p, F&& consider) const {
        const double rm = dom_.disc_radius(m);
        const Point2 c{double(m), 0.0};
        const double r = qslab::geom::dist(p, c);
        const double theta = std::atan2(p.y, p.x - c.x);  // 0 when p == c
        bool in_cut = false;
        for (const AngleCut& cut : cuts_[m])
            if (theta >= cut.lo && theta <= cut.hi) { in_cut = true; break; }
        if (!in_cut) {
            consider(SignedLog::of(std::abs(r - rm)));
            return;
        }
        // Nearest kept-arc endpoints (corners of the boundary).
        for (const AngleCut& cut : cuts_[m]) {
            for (double a : {cut.lo, cut.hi}) {
                if (a <= -kPi || a >= kPi) continue;  // wrap seam, covered by mirror cut
                const Point2 q{c.x + rm * std::cos(a), c.y + rm * std::sin(a)};
                consider(SignedLog::of(qslab::geom::dist(p, q)));
            }
        }
    }

    /// Clip of the horizontal walls of strip n against discs n and n+1:
    /// kept x-range [x_lo, x_hi] (possibly empty).
    std::pair<double, double> wall_keep(int n) const {
        const double lh = dom_.log_half_height(n);
        const double hh = std::exp(lh);  // 0 once underflowed; exact enough for clips
        const double rn = dom_.disc_radius(n);
        double x_lo = double(n) + std::sqrt(std::max(rn * rn - hh * hh, 0.0));
        double x_hi = double(n) + 1.0;
        if (n + 1 <= dom_.n_max) {
            const double rk = dom_.disc_radius(n + 1);
            x_hi -= std::sqrt(std::max(rk * rk - hh * hh, 0.0));
        }
        return {x_lo, x_hi};
    }

    template <class F>
    void strip_candidates(int n, Point2 p, F&& consider) const {
        const double lh = dom_.log_half_height(n);
        const double hh = std::exp(lh);
        auto [x_lo, x_hi] = wall_keep(n);
        const bool inside = in_strip(dom_, n, p);
        if (inside && x_lo <= x_hi && p.x >= x_lo && p.x <= x_hi) {
            // vertical gap to the nearer wall, exact in log space
            const SignedLog wall = SignedLog::from_log(lh);
            const SignedLog y = SignedLog::of(std::abs(p.y));
            consider(wall - y);
        }
        if (x_lo <= x_hi) {
            // wall corner points (true boundary corners)
            for (double xe : {x_lo, x_hi}) {
                consider(SignedLog::of(std::hypot(p.x - xe, std::abs(p.y) - hh)));
                consider(SignedLog::of(std::hypot(p.x - xe, std::abs(p.y) + hh)));
            }
            if (!inside) {
                // perpendicular feet onto the kept wall, plain scale
                if (p.x >= x_lo && p.x <= x_hi)
                    consider(SignedLog::of(std::abs(std::abs(p.y) - hh)));
            }
        }
        if (n == dom_.n_max) {
            // far end cap {n+1} x [-h/2, h/2]
            if (inside) {
                consider(SignedLog::of(double(n) + 1.0 - p.x));
            } else {
                const double dy = std::max(std::abs(p.y) - hh, 0.0);
                consider(SignedLog::of(std::hypot(p.x - (double(n) + 1.0), dy)));
            }
        }
    }

    double exterior_distance(Point2 p) const {
        double best = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= dom_.n_max; ++n) {
            const double r = qslab::geom::dist(p, {double(n), 0.0});
            best = std::min(best, std::max(r - dom_.disc_radius(n), 0.0));
            const double dx =
                std::max({double(n) - p.x, p.x - (double(n) + 1.0), 0.0});
            const double hh = std::exp(dom_.log_half_height(n));
            const double dy = (log_abs(p.y) < dom_.log_half_height(n))
                                  ? 0.0
                                  : std::abs(p.y) - hh;
            best = std::min(best, std::hypot(dx, dy));
        }
        return best;
    }

    NazarovDomain dom_;
    std::vector<std::vector<AngleCut>> cuts_;
};

}  // namespace

bool nazarov_contains(const NazarovDomain& dom, Point2 p) {
    for (int n = 1; n <= dom.n_max; ++n)
        if (in_disc(dom, n, p) || in_strip(dom, n, p)) return true;
    return false;
}

OraclePtr make_nazarov_oracle(const NazarovDomain& dom) {
    if (dom.n_max < 1 || dom.n_max > 40)
        throw std::invalid_argument("nazarov n_max must be in [1, 40]");
    return std::make_shared<NazarovOracle>(dom);
}

std::vector<Point2> nazarov_boundary_points(const NazarovDomain& dom, double h) {
    // Wall heights may round to 0.0; such samples test as interior to
    // their own strip, which is a rounding artifact and not a reason to
    // drop them. Filter each primitive only against the *other*
    // components.
    auto interior_to_other = [&](Point2 p, int own_disc, int own_strip) {
        for (int k = 1; k <= dom.n_max; ++k) {
            if (k != own_disc && in_disc(dom, k, p)) return true;
            if (k != own_strip && in_strip(dom, k, p)) return true;
        }
        return false;
    };
    std::vector<Point2> pts;
    for (int n = 1; n <= dom.n_max; ++n) {
        const double r = dom.disc_radius(n);
        const int steps = std::max(16, int(std::ceil(2.0 * kPi * r / h)));
        for (int i = 0; i < steps; ++i) {
            const double t = 2.0 * kPi * double(i) / steps;
            const Point2 p{double(n) + r * std::cos(t), r * std::sin(t)};
            // circle samples interior to the adjacent strips are genuine
            // gap points only at sub-double scale; keep the spine sample
            if (!interior_to_other(p, n, -1)) pts.push_back(p);
        }
        const double hh = std::exp(dom.log_half_height(n));
        const int ws = std::max(2, int(std::ceil(1.0 / h)));
        for (int i = 0; i <= ws; ++i) {
            const double x = double(n) + double(i) / ws;
            for (double y : {hh, -hh}) {
                const Point2 p{x, y};
                if (!interior_to_other(p, -1, n)) pts.push_back(p);
            }
        }
        if (n == dom.n_max) {
            pts.emplace_back(double(n) + 1.0, hh);
            pts.emplace_back(double(n) + 1.0, -hh);
        }
    }
    return pts;
}

}  // namespace qslab::geom
