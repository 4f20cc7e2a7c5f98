#include <doctest.h>

#include <cmath>

#include "qslab/geometry/ahlfors.hpp"
#include "qslab/geometry/curve.hpp"
#include "qslab/geometry/dimension.hpp"
#include "qslab/geometry/interval_union.hpp"
#include "qslab/num/rng.hpp"

using namespace qslab;
using geom::ClosedCurve;
using geom::Point2;

namespace {

/// Independent arc-condition oracle: plain triple loops, diameters
/// recomputed from scratch for every split pair.
double ahlfors_oracle(const ClosedCurve& curve) {
    const auto& v = curve.vertices;
    const std::size_t n = v.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d1 = 0.0, d2 = 0.0;
            for (std::size_t a = i; a <= j; ++a)
                for (std::size_t b = a; b <= j; ++b) d1 = std::max(d1, geom::dist(v[a], v[b]));
            std::vector<Point2> arc2;
            for (std::size_t a = j; a < n; ++a) arc2.push_back(v[a]);
            for (std::size_t a = 0; a <= i; ++a) arc2.push_back(v[a]);
            for (std::size_t a = 0; a < arc2.size(); ++a)
                for (std::size_t b = a; b < arc2.size(); ++b)
                    d2 = std::max(d2, geom::dist(arc2[a], arc2[b]));
            best = std::max(best, std::min(d1, d2) / geom::dist(v[i], v[j]));
        }
    }
    return best;
}

ClosedCurve transformed(const ClosedCurve& c, double scale, double angle, Point2 shift) {
    ClosedCurve out = c;
    const double cs = std::cos(angle), sn = std::sin(angle);
    for (auto& v : out.vertices)
        v = Point2{scale * (cs * v.x - sn * v.y) + shift.x,
                   scale * (sn * v.x + cs * v.y) + shift.y};
    return out;
}

}  // namespace

TEST_CASE("koch snowflake construction: counts and lengths") {
    const auto k0 = geom::build_koch_snowflake(0);
    CHECK(k0.vertices.size() == 3);
    const auto k1 = geom::build_koch_snowflake(1);
    CHECK(k1.vertices.size() == 12);
    const auto k3 = geom::build_koch_snowflake(3);
    CHECK(k3.vertices.size() == 192);
    // L_k = 3 (4/3)^k, exact rational recurrence
    CHECK(geom::polyline_length(k3) == doctest::Approx(64.0 / 9.0).epsilon(1e-12));
    for (int k = 0; k <= 5; ++k) {
        CHECK(geom::polyline_length(geom::build_koch_snowflake(k)) ==
              doctest::Approx(3.0 * std::pow(4.0 / 3.0, k)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(geom::build_koch_snowflake(9), std::invalid_argument);
    CHECK_THROWS_AS(geom::build_koch_snowflake(-1), std::invalid_argument);
}

TEST_CASE("koch snowflake is simple (no repeated vertices at scale)") {
    const auto k2 = geom::build_koch_snowflake(2);
    k2.validate();
    for (std::size_t i = 0; i < k2.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < k2.vertices.size(); ++j)
            CHECK(geom::dist(k2.vertices[i], k2.vertices[j]) > 1e-6);
}

TEST_CASE("regular polygon approximates the circle: constant 1 within 1%") {
    const auto result = geom::ahlfors_constant(geom::regular_polygon(512));
    CHECK(result.constant >= 1.0);
    CHECK(result.constant <= 1.01);
}

TEST_CASE("straight segment window: constant exactly 1") {
    const auto seg = geom::segment_curve({0.0, 0.0}, {5.0, 1.0}, 200);
    const auto result = geom::ahlfors_constant(seg);
    CHECK(result.constant == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("arc constant matches the exhaustive pair-scan oracle") {
    const auto k2 = geom::build_koch_snowflake(2);  // 48 vertices, oracle is O(n^4)
    const auto fast = geom::ahlfors_constant(k2);
    const double slow = ahlfors_oracle(k2);
    CHECK(fast.constant == doctest::Approx(slow).epsilon(1e-12));
    CHECK(fast.constant >= 1.0);

    // windowed sine graph, open-curve path
    const auto sine = geom::graph_curve([](double x) { return std::sin(x); }, 0.0, 12.0, 60);
    const auto fast_open = geom::ahlfors_constant(sine);
    double slow_open = 0.0;
    for (std::size_t i = 0; i + 1 < sine.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < sine.vertices.size(); ++j) {
            double diam = 0.0;
            for (std::size_t a = i; a <= j; ++a)
                for (std::size_t b = a; b <= j; ++b)
                    diam = std::max(diam, geom::dist(sine.vertices[a], sine.vertices[b]));
            slow_open =
                std::max(slow_open, diam / geom::dist(sine.vertices[i], sine.vertices[j]));
        }
    }
    CHECK(fast_open.constant == doctest::Approx(slow_open).epsilon(1e-12));
}

TEST_CASE("arc constant is similarity invariant") {
    const auto k2 = geom::build_koch_snowflake(2);
    const double base = geom::ahlfors_constant(k2).constant;
    const double moved =
        geom::ahlfors_constant(transformed(k2, 3.7, 1.1, {-4.0, 2.5})).constant;
    CHECK(moved == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("arc constant rejects degenerate curves") {
    ClosedCurve bad;
    bad.vertices = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(geom::ahlfors_constant(bad), std::invalid_argument);
}

TEST_CASE("witness pair is reported and attains the constant") {
    const auto k2 = geom::build_koch_snowflake(2);
    const auto r = geom::ahlfors_constant(k2);
    REQUIRE(r.i < r.j);
    REQUIRE(r.j < k2.vertices.size());
    // recompute the ratio at the witness split
    const auto& v = k2.vertices;
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t a = r.i; a <= r.j; ++a)
        for (std::size_t b = a; b <= r.j; ++b) d1 = std::max(d1, geom::dist(v[a], v[b]));
    std::vector<Point2> arc2;
    for (std::size_t a = r.j; a < v.size(); ++a) arc2.push_back(v[a]);
    for (std::size_t a = 0; a <= r.i; ++a) arc2.push_back(v[a]);
    for (std::size_t a = 0; a < arc2.size(); ++a)
        for (std::size_t b = a; b < arc2.size(); ++b) d2 = std::max(d2, geom::dist(arc2[a], arc2[b]));
    CHECK(std::min(d1, d2) / geom::dist(v[r.i], v[r.j]) ==
          doctest::Approx(r.constant).epsilon(1e-12));
}

TEST_CASE("box counting: unit segment has dimension 1") {
    std::vector<Point2> pts;
    for (int i = 0; i <= 8192; ++i) pts.emplace_back(double(i) / 8192, 0.0);
    const auto rep = geom::box_counting_dimension(pts, 0.5, 12, 1.0 / 8192);
    CHECK(rep.slope == doctest::Approx(1.0).epsilon(0.02));
    CHECK(rep.fit_quality > 0.999);
    for (std::size_t i = 0; i + 1 < rep.counts.size(); ++i)
        CHECK(rep.counts[i + 1] >= rep.counts[i]);
}

TEST_CASE("box counting guards") {
    std::vector<Point2> pts = {{0, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(geom::box_counting_dimension(pts, 0.5, 3, 1e-4), std::invalid_argument);
    CHECK_THROWS_AS(geom::box_counting_dimension(pts, 0.5, 9, 0.4), std::invalid_argument);
    // scales above the separation of a finite set: slope ~ 0
    const auto rep = geom::box_counting_dimension(pts, 512.0, 9, 1e-6);
    CHECK(rep.slope <= 0.05);
}

TEST_CASE("box counting: koch and cantor anchors") {
    const auto koch = geom::build_koch_snowflake(5);
    const auto pts = geom::sample_curve_points(koch, 1.0 / 1024.0);
    const auto rep = geom::box_counting_dimension(pts, 0.5, 9, 1.0 / 1024.0);
    CHECK(rep.slope == doctest::Approx(std::log(4.0) / std::log(3.0)).epsilon(0.04));

    std::vector<Point2> cpts;
    for (double x : geom::cantor_set_points(10)) cpts.emplace_back(x, 0.0);
    const auto crep = geom::box_counting_dimension(cpts, 1.0, 11, std::pow(3.0, -10.0));
    CHECK(crep.slope == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(0.08));
}
