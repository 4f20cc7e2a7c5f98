#include <doctest.h>

#include <cmath>

#include "qslab/geometry/ahlfors.hpp"
#include "qslab/geometry/qsmod.hpp"
#include "qslab/maps/plane_map.hpp"
#include "qslab/num/rng.hpp"

using namespace qslab;
using geom::Complex;
using geom::Point2;

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

}  // namespace

TEST_CASE("mobius 1/z: involution, values, pole") {
    const auto inv = maps::make_mobius({0, 0}, {1, 0}, {1, 0}, {0, 0});
    CHECK(std::abs(inv->eval(Complex{2.0, 0.0}) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(inv->eval(inv->eval(Complex{0.3, 0.7})) - Complex{0.3, 0.7}) < 1e-12);
    CHECK_THROWS_AS(inv->eval(Complex{0.0, 0.0}), maps::PoleError);
    CHECK_THROWS_AS(maps::make_mobius({1, 0}, {0, 0}, {1, 0}, {0, 0}),
                    std::invalid_argument);  // ad - bc = 0
}

TEST_CASE("mobius derivative moduli follow n!/|z|^(n+1)") {
    const auto inv = maps::make_mobius({0, 0}, {1, 0}, {1, 0}, {0, 0});
    // |A'(0.5)| = 1!/0.5^2 = 4
    CHECK(std::abs(inv->complex_derivative(1, {0.5, 0.0})) == doctest::Approx(4.0));
    num::Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Complex z{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        if (std::abs(z) < 0.05) continue;
        for (int n = 1; n <= 4; ++n) {
            const double expect = factorial(n) / std::pow(std::abs(z), n + 1);
            CHECK(std::abs(inv->complex_derivative(n, z)) ==
                  doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("mobius closed form matches finite differences") {
    const auto m = maps::make_mobius({2, 1}, {0, -1}, {1, 0}, {3, 0});
    const Point2 z{0.5, 0.25};
    for (const maps::MultiIndex2 k : {maps::MultiIndex2{1, 0}, maps::MultiIndex2{0, 1},
                                      maps::MultiIndex2{1, 1}, maps::MultiIndex2{2, 0}}) {
        const auto exact = maps::map_derivative(*m, k, z);
        REQUIRE(exact.exact);
        // force the FD path through a bare wrapper
        struct Wrap final : maps::PlaneMap {
            maps::PlaneMapPtr inner;
            std::string family() const override { return "wrap"; }
            Complex eval(Complex w) const override { return inner->eval(w); }
            Complex inverse(Complex w) const override { return inner->inverse(w); }
        } wrap;
        wrap.inner = m;
        const auto fd = maps::map_derivative(wrap, k, z);
        CHECK(!fd.exact);
        CHECK(fd.value[0] ==
              doctest::Approx(exact.value[0]).epsilon(1e-5).scale(std::abs(exact.value[0]) + 1));
        CHECK(fd.value[1] ==
              doctest::Approx(exact.value[1]).epsilon(1e-5).scale(std::abs(exact.value[1]) + 1));
    }
}

TEST_CASE("pole placement sends an exterior point to infinity-like range") {
    // z -> 1/(z - z0) via pipeline composition of translate then invert
    const Complex z0{3.0, 1.0};
    const auto shift = maps::make_mobius({1, 0}, -z0, {0, 0}, {1, 0});
    const auto inv = maps::make_mobius({0, 0}, {1, 0}, {1, 0}, {0, 0});
    const auto comp = maps::compose({shift, inv});
    const auto direct = maps::make_mobius({0, 0}, {1, 0}, {1, 0}, -z0);
    num::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Complex z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        CHECK(std::abs(comp->eval(z) - direct->eval(z)) < 1e-12);
    }
    // far from the pole the image is near zero: bounded image of an
    // unbounded fixture
    CHECK(std::abs(comp->eval(Complex{1e8, 0.0})) < 1e-7);
}

TEST_CASE("composition evaluates in pipeline order and inverts in reverse") {
    const auto inv = maps::make_mobius({0, 0}, {1, 0}, {1, 0}, {0, 0});
    const auto twice = maps::compose({inv, inv});
    num::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const Complex z{rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0)};
        CHECK(std::abs(twice->eval(z) - z) < 1e-12);
        CHECK(std::abs(twice->inverse(z) - z) < 1e-12);
    }
}

TEST_CASE("sqrt branch: principal values on the [0, inf) cut") {
    const auto g = maps::make_sqrt_branch(0.0, {-1.0, 0.0}, {0.0, 1.0});
    CHECK(std::abs(g->eval(Complex{-4.0, 0.0}) - Complex{0.0, 2.0}) < 1e-12);
    CHECK_THROWS_AS(g->eval(Complex{0.25, 0.0}), maps::BranchError);
    CHECK_THROWS_AS(g->eval(Complex{0.0, 0.0}), maps::BranchError);
    // defining identity on random off-cut samples
    num::Rng rng(13);
    for (int i = 0; i < 10000; ++i) {
        const Complex z{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        if (z.imag() == 0.0 && z.real() >= 0.0) continue;
        const Complex w = g->eval(z);
        CHECK(std::abs(w * w - z) <= 1e-12 * (1.0 + std::abs(z)));
        CHECK(std::abs(g->inverse(w) - z) <= 1e-12 * (1.0 + std::abs(z)));
    }
    // |g'| = 1/(2 sqrt|z|) approaching 0.25 from the lower half plane
    const Complex below{0.25, -1e-12};
    CHECK(std::abs(g->complex_derivative(1, below)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sqrt branch respects the base pair choice") {
    const auto minus = maps::make_sqrt_branch(0.0, {-1.0, 0.0}, {0.0, -1.0});
    CHECK(std::abs(minus->eval(Complex{-4.0, 0.0}) - Complex{0.0, -2.0}) < 1e-12);
    CHECK_THROWS_AS(maps::make_sqrt_branch(0.0, {-1.0, 0.0}, {0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("square then sqrt composes to the identity off the cut") {
    const auto g = maps::make_sqrt_branch(0.0, {-1.0, 0.0}, {0.0, 1.0});
    const auto square = maps::make_square();
    const auto id = maps::compose({g, square});  // apply sqrt first, then square
    num::Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        const Complex z{rng.uniform(-2.0, 2.0), rng.uniform(0.1, 2.0)};
        CHECK(std::abs(id->eval(z) - z) < 1e-12);
    }
}

TEST_CASE("identity-map derivatives via multi-indices") {
    const auto ident = maps::make_mobius({1, 0}, {0, 0}, {0, 0}, {1, 0});
    const auto d10 = maps::map_derivative(*ident, {1, 0}, {0.3, 0.4});
    CHECK(d10.value[0] == doctest::Approx(1.0));
    CHECK(d10.value[1] == doctest::Approx(0.0));
    const auto d01 = maps::map_derivative(*ident, {0, 1}, {0.3, 0.4});
    CHECK(d01.value[0] == doctest::Approx(0.0));
    CHECK(d01.value[1] == doctest::Approx(1.0));
    const auto d20 = maps::map_derivative(*ident, {2, 0}, {0.3, 0.4});
    CHECK(std::abs(d20.value[0]) < 1e-12);
    CHECK(std::abs(d20.value[1]) < 1e-12);
    CHECK_THROWS_AS(maps::map_derivative(*ident, {4, 3}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("sqrt preimage of an arc through the origin") {
    // the positive-axis segment [0, R]: preimage is [-sqrt(R), sqrt(R)]
    geom::ClosedCurve seg;
    seg.closed = false;
    seg.unbounded_window = {0.0, 4.0};
    for (int i = 0; i <= 64; ++i) seg.vertices.emplace_back(4.0 * i / 64.0, 0.0);
    const auto pre = maps::sqrt_preimage_curve(seg);
    CHECK(pre.vertices.size() == 2 * seg.vertices.size() - 1);
    CHECK(pre.vertices.front().x == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(pre.vertices.back().x == doctest::Approx(2.0).epsilon(1e-12));
    for (const auto& v : pre.vertices) CHECK(std::abs(v.y) < 1e-12);
    const auto r = geom::ahlfors_constant(pre);
    CHECK(r.constant == doctest::Approx(1.0).epsilon(1e-12));
    // point-set symmetry under negation
    for (std::size_t i = 0; i < pre.vertices.size(); ++i) {
        const auto& a = pre.vertices[i];
        const auto& b = pre.vertices[pre.vertices.size() - 1 - i];
        CHECK(a.x == doctest::Approx(-b.x).epsilon(1e-12));
        CHECK(a.y == doctest::Approx(-b.y).epsilon(1e-12));
    }
    // anchoring validation
    geom::ClosedCurve off = seg;
    off.vertices.front() = {0.5, 0.0};
    CHECK_THROWS_AS(maps::sqrt_preimage_curve(off), std::invalid_argument);
}

TEST_CASE("sqrt preimage of a sine-graph arc is refinement stable") {
    auto build = [](int n) {
        geom::ClosedCurve c;
        c.closed = false;
        c.unbounded_window = {0.0, 20.0};
        for (int i = 0; i <= n; ++i) {
            const double x = 20.0 * double(i) / n;
            c.vertices.emplace_back(x, x == 0.0 ? 0.0 : std::sin(x));
        }
        c.vertices.front() = {0.0, 0.0};
        return c;
    };
    const double c512 = geom::ahlfors_constant(maps::sqrt_preimage_curve(build(512))).constant;
    const double c1024 = geom::ahlfors_constant(maps::sqrt_preimage_curve(build(1024))).constant;
    CHECK(std::abs(c1024 - c512) / c512 < 0.05);
    CHECK(std::isfinite(c512));
}

TEST_CASE("quasisymmetry table: identity map has ratio equal to t") {
    geom::QsPlan plan;
    plan.n_points = 48;
    plan.n_triples = 5000;
    plan.seed = 2;
    const auto ident = maps::make_mobius({1, 0}, {0, 0}, {0, 0}, {1, 0});
    const auto table = geom::sample_quasisymmetry_modulus(*ident, geom::Disc{}, plan);
    CHECK(table.triples > 0);
    for (const auto& bin : table.bins) {
        if (bin.count == 0) continue;
        CHECK(bin.max_ratio == bin.max_t);  // identical arithmetic, bitwise equal
    }
}

TEST_CASE("quasisymmetry table: radial stretch stays bounded, planar exp grows") {
    struct RadialStretch final : maps::PlaneMap {
        std::string family() const override { return "radial_stretch"; }
        Complex eval(Complex z) const override { return z * std::abs(z); }
        Complex inverse(Complex w) const override {
            const double r = std::abs(w);
            return r == 0.0 ? w : w / std::sqrt(r);
        }
    } stretch;
    // exhaustive scan over a fixed grid, compared with the sampler
    std::vector<Point2> pts;
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j)
            if (i || j) pts.emplace_back(0.22 * i, 0.22 * j);
    const auto exhaustive = geom::quasisymmetry_modulus_exhaustive(stretch, pts, 24);
    double worst = 0.0;
    for (const auto& bin : exhaustive.bins) worst = std::max(worst, bin.max_ratio);
    CHECK(std::isfinite(worst));
    CHECK(worst < 50.0);  // bounded distortion table for the model quasiconformal map

    // widening strips under the planar exponential: per-bin max grows
    const auto pexp = maps::make_planar_exp();
    auto window_pts = [](double w) {
        std::vector<Point2> out;
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 4; ++j) out.emplace_back(-w + 2 * w * i / 8.0, 0.5 * j / 4.0);
        return out;
    };
    const auto narrow = geom::quasisymmetry_modulus_exhaustive(*pexp, window_pts(2.0), 24);
    const auto wide = geom::quasisymmetry_modulus_exhaustive(*pexp, window_pts(6.0), 24);
    double narrow_max = 0.0, wide_max = 0.0;
    for (const auto& b : narrow.bins) narrow_max = std::max(narrow_max, b.max_ratio);
    for (const auto& b : wide.bins) wide_max = std::max(wide_max, b.max_ratio);
    CHECK(wide_max > 10.0 * narrow_max);
}

TEST_CASE("exact inverse round trips across families") {
    std::vector<maps::PlaneMapPtr> family = {
        maps::make_mobius({2, 1}, {0, -1}, {1, 0}, {3, 0}),
        maps::make_sqrt_branch(0.0, {-1.0, 0.0}, {0.0, 1.0}),
        maps::make_planar_exp(),
    };
    num::Rng rng(23);
    for (const auto& m : family) {
        for (int i = 0; i < 10000; ++i) {
            const Complex z{rng.uniform(-2.0, 2.0), rng.uniform(0.05, 2.0)};
            Complex w, back;
            try {
                w = m->eval(z);
                back = m->inverse(w);
            } catch (const std::domain_error&) {
                continue;  // pole or branch guard
            }
            CHECK(std::abs(back - z) <= 1e-10 * (1.0 + std::abs(z)));
        }
    }
}
