#include <doctest.h>

#include <cmath>

#include "qslab/schwartz/flatness.hpp"
#include "qslab/schwartz/sweep.hpp"
#include "qslab/num/rng.hpp"

using namespace qslab;
using schwartz::SamplePlan;
using num::SignedLog;

namespace {

SamplePlan small_plan() {
    SamplePlan p;
    p.levels = 3;
    p.window0 = 8.0;
    p.base_nodes = 32;
    p.layers0 = 12;
    p.seed = 5;
    return p;
}

}  // namespace

TEST_CASE("bump: plateau value, support, derivative bound cache") {
    const auto chi = schwartz::make_bump(maps::BumpSpec::standard(0.25, 0.05));
    CHECK(chi.value({0.0}).value() == doctest::Approx(1.0));        // chi(0) = 1
    CHECK(chi.value({0.3}).sign == 0);                              // outside support
    CHECK(chi.value({-0.25}).sign == 0);
    const auto* field = chi.field.get();
    SignedLog d;
    REQUIRE(field->exact_derivative({1}, {0.15}, d));
    CHECK(std::isfinite(d.ln));
    // C_0 = 1 for a plateau bump
    const auto raw = maps::Bump(maps::BumpSpec::standard(0.25, 0.05));
    CHECK(raw.max_abs_derivative(0) == doctest::Approx(1.0));
    CHECK(raw.max_abs_derivative(1) > 0.0);
}

TEST_CASE("bump is flat at its support endpoints") {
    const auto chi = schwartz::make_bump(maps::BumpSpec::standard(0.25, 0.05));
    std::vector<schwartz::FlatnessProbe<1>> probes = {{{0.25}, {-1.0}}, {{-0.25}, {1.0}}};
    // step well below the transition width so high-order one-sided
    // stencils only see the flat joint
    const auto rep = schwartz::flatness_check<1>(chi, probes, 4, 1e-6, 5e-4);
    CHECK(rep.pass);
    for (const auto& coeffs : rep.coefficients)
        for (double c : coeffs) CHECK(c <= 1e-6);
}

TEST_CASE("gaussian is not flat at 0; smooth cutoff tail is flat at 0") {
    const auto gauss = schwartz::make_gaussian();
    const auto rep =
        schwartz::flatness_check<1>(gauss, {{{0.0}, {1.0}}}, 2);
    CHECK(!rep.pass);
    CHECK(rep.coefficients[0][0] == doctest::Approx(1.0));  // zeroth coefficient

    const auto tail = schwartz::make_decaying_tail();
    const auto rep2 = schwartz::flatness_check<1>(tail, {{{0.0}, {1.0}}}, 4);
    CHECK(rep2.pass);
}

TEST_CASE("seminorm of the gaussian: k=0 anchors") {
    const auto gauss = schwartz::make_gaussian();
    const auto plan = small_plan();
    const auto r00 = schwartz::seminorm<1>(gauss, {0}, {0}, plan);
    CHECK(r00.sup.value() == doctest::Approx(1.0));  // grid contains 0 exactly
    CHECK(r00.argmax[0] == doctest::Approx(0.0));
    SamplePlan fine = plan;
    fine.base_nodes = 256;
    const auto r01 = schwartz::seminorm<1>(gauss, {0}, {1}, fine);
    // calculus oracle: stationary point at 1/sqrt(2)
    CHECK(r01.sup.value() == doctest::Approx(std::exp(-0.5) / std::sqrt(2.0)).epsilon(1e-3));
    // trend is monotone non-decreasing by grid nesting
    for (std::size_t i = 0; i + 1 < r01.trend.size(); ++i)
        CHECK(!(r01.trend[i + 1] < r01.trend[i]));
}

TEST_CASE("seminorms are absolutely homogeneous") {
    const auto gauss = schwartz::make_gaussian();
    const auto scaled = schwartz::scale<1>(gauss, -3.0);
    const auto plan = small_plan();
    const auto a = schwartz::seminorm<1>(gauss, {1}, {2}, plan);
    const auto b = schwartz::seminorm<1>(scaled, {1}, {2}, plan);
    CHECK(b.sup.ln == doctest::Approx(a.sup.ln + std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("log-mode and plain evaluation agree where doubles survive") {
    const auto g = schwartz::make_radial_g();
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
        const double plain = std::exp(1.0 / (r - 1.0));
        CHECK(g.value({r, 0.0}).value() == doctest::Approx(plain).epsilon(1e-12));
    }
    // beyond the underflow line the log field keeps the value
    const auto v = g.value({0.9995, 0.0});
    CHECK(v.sign == 1);
    CHECK(v.ln == doctest::Approx(1.0 / (0.9995 - 1.0)).epsilon(1e-9));
    CHECK(v.value() == 0.0);  // honest double underflow
    CHECK_THROWS_AS(g.value({1.0, 0.0}), std::domain_error);
}

TEST_CASE("radial witness g: decay ratio sup e^-1 at the centre") {
    const auto g = schwartz::make_radial_g();
    SamplePlan plan = small_plan();
    const auto rep = schwartz::decay_ratio<2>(g, 1, plan);
    CHECK(rep.sup.value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-3));
    CHECK(std::hypot(rep.argmax[0], rep.argmax[1]) < 0.1);  // argmax near the centre
    CHECK(schwartz::classify_trend(rep.trend) == schwartz::Trend::Stable);
}

TEST_CASE("nazarov witness: plateau values and flatness at true boundary points") {
    const auto f = schwartz::make_nazarov_f(6);
    for (int n = 1; n <= 6; ++n)
        CHECK(f.value({double(n), 0.0}).ln == doctest::Approx(-double(n)).epsilon(1e-12));
    // plateau: chi = 1 on |w| <= 1/2, so f = e^-n on B(n, 1/(2n^2))
    CHECK(f.value({1.2, 0.1}).ln == doctest::Approx(-1.0).epsilon(1e-12));
    // a strip wall point away from the discs and a circle point
    const double h2 = std::exp(-std::exp(4.0)) / 2.0;
    std::vector<schwartz::FlatnessProbe<2>> probes = {
        {{2.5, h2}, {0.0, -1.0}},
        {{1.0 + std::cos(0.8), std::sin(0.8)}, {-std::cos(0.8), -std::sin(0.8)}},
    };
    const auto rep = schwartz::flatness_check<2>(f, probes, 3);
    CHECK(rep.pass);
}

TEST_CASE("nazarov witness: decay trends stay finite on the windowed domain") {
    const auto f = schwartz::make_nazarov_f(3);
    SamplePlan plan = small_plan();
    plan.base_nodes = 8;
    for (int m = 1; m <= 2; ++m) {
        const auto rep = schwartz::decay_ratio<2>(f, m, plan);
        CHECK(rep.sup.sign == 1);
        CHECK(schwartz::classify_trend(rep.trend) == schwartz::Trend::Stable);
    }
}

TEST_CASE("interval witness f: pinned values and integer zeros") {
    const auto a = geom::LengthSpec::exp_decay();
    std::vector<std::pair<int, int>> pairs = {{3, 2}, {7, 5}, {12, 9}};
    const auto f = schwartz::make_interval_witness_f(a, pairs, 12);
    CHECK(f.value({2.5}).ln == doctest::Approx(-3.0).epsilon(1e-12));   // a(3) = e^-3
    CHECK(f.value({5.5}).ln == doctest::Approx(-7.0).epsilon(1e-12));
    CHECK(f.value({9.5}).ln == doctest::Approx(-12.0).epsilon(1e-12));
    for (int k = 1; k <= 12; ++k) CHECK(f.value({double(k)}).sign == 0);
}

TEST_CASE("interval witness obeys the derivative-growth bound on its support") {
    // |x^k f^(l)(x)| <= C_l (n+1)^k a(n) on (m, m+1) when m <= n
    const auto a = geom::LengthSpec::exp_decay();
    std::vector<std::pair<int, int>> pairs = {{5, 3}};
    const auto f = schwartz::make_interval_witness_f(a, pairs, 6);
    const maps::Bump chi(maps::BumpSpec::standard(1.0, 0.25));
    for (int l = 0; l <= 3; ++l) {
        const double cl = chi.max_abs_derivative(l) * std::pow(4.0, l);  // scaled to width 1/4
        for (int k = 0; k <= 3; ++k) {
            const double bound = cl * std::pow(6.0, k) * std::exp(-5.0);
            for (int i = 1; i < 60; ++i) {
                const double x = 3.0 + double(i) / 60.0;
                const auto d = schwartz::derivative<1>(f, {l}, {x});
                const double lhs = std::pow(x, k) * std::abs(d.value.value());
                CHECK(lhs <= bound * (1.0 + 1e-6) + 1e-12);
            }
        }
    }
}

TEST_CASE("pullback: identity, shift, and mobius chain rule") {
    const auto gauss2 = schwartz::make_product(schwartz::make_gaussian(),
                                               schwartz::make_gaussian(), geom::Disc{},
                                               "gauss2");
    const auto ident = maps::make_mobius({1, 0}, {0, 0}, {0, 0}, {1, 0});
    const auto pb_id = schwartz::pullback(gauss2, ident, geom::Disc{});
    const auto shift = maps::make_mobius({1, 0}, {1, 0}, {0, 0}, {1, 0});  // z + 1
    const auto pb_shift = schwartz::pullback(gauss2, shift, geom::Disc{});
    num::Rng rng(53);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(-0.7, 0.7), y = rng.uniform(-0.7, 0.7);
        CHECK(pb_id.value({x, y}).value() ==
              doctest::Approx(gauss2.value({x, y}).value()).epsilon(1e-12));
        CHECK(pb_shift.value({x, y}).value() ==
              doctest::Approx(gauss2.value({x + 1.0, y}).value()).epsilon(1e-12));
    }

    // chain rule oracle for the inversion z -> 1/z on the exterior domain
    const auto inv = maps::make_mobius({0, 0}, {1, 0}, {1, 0}, {0, 0});
    const auto pb_inv = schwartz::pullback(gauss2, inv, geom::ExteriorDisc{});
    auto oracle_dx = [](double x, double y) {
        const double r2 = x * x + y * y;
        const double a1 = x / r2, a2 = -y / r2;
        const double g = std::exp(-(a1 * a1 + a2 * a2));
        const double gx = -2.0 * a1 * g, gy = -2.0 * a2 * g;
        const double a1x = (y * y - x * x) / (r2 * r2);
        const double a2x = 2.0 * x * y / (r2 * r2);
        return gx * a1x + gy * a2x;
    };
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(1.2, 3.0), y = rng.uniform(0.3, 3.0);
        const auto d = schwartz::derivative<2>(pb_inv, {1, 0}, {x, y});
        const double expect = oracle_dx(x, y);
        CHECK(d.value.value() ==
              doctest::Approx(expect).epsilon(1e-5).scale(1.0 + std::abs(expect)));
    }
}

TEST_CASE("pullback respects pipeline composition") {
    const auto gauss2 = schwartz::make_product(schwartz::make_gaussian(),
                                               schwartz::make_gaussian(), geom::Disc{},
                                               "gauss2");
    const auto phi = maps::make_mobius({1, 0}, {0.3, 0.1}, {0, 0}, {1, 0});
    const auto psi = maps::make_mobius({0.8, 0}, {0, 0}, {0, 0}, {1, 0});
    const auto chain = maps::compose({phi, psi});
    const auto lhs = schwartz::pullback(gauss2, chain, geom::Disc{});
    // pipeline: chain applies phi first, so pull back along psi, then phi
    const auto rhs = schwartz::pullback(schwartz::pullback(gauss2, psi, geom::Disc{}), phi,
                                        geom::Disc{});
    num::Rng rng(59);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
        const double a = lhs.value({x, y}).value();
        const double b = rhs.value({x, y}).value();
        CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
}

TEST_CASE("pullback evaluation errors when the map leaves the inner domain") {
    const auto g = schwartz::make_radial_g();
    const auto shift = maps::make_mobius({1, 0}, {2, 0}, {0, 0}, {1, 0});  // z + 2
    const auto pb = schwartz::pullback(g, shift, geom::Disc{});
    CHECK_THROWS_AS(pb.value({0.0, 0.0}), std::domain_error);
}

TEST_CASE("exp/log pullback: window-doubling growth in the weighted sup") {
    // f(log y) = 1/y beyond e, so sup_{y <= W} |y^2 f(log y)| = W
    const auto f = schwartz::make_decaying_tail();
    geom::IntervalUnion half;
    half.intervals.push_back({0.0, 1e300});
    const auto pb = schwartz::pullback(f, maps::make_exp_log_map(true),
                                       geom::IntervalDomain{half});
    SamplePlan plan = small_plan();
    const auto rep = schwartz::seminorm<1>(pb, {0}, {2}, plan);
    REQUIRE(rep.trend.size() == 3);
    for (std::size_t i = 0; i < rep.trend.size(); ++i) {
        CHECK(rep.trend[i].value() == doctest::Approx(rep.windows[i]).epsilon(0.05));
    }
    const auto rep3 = schwartz::seminorm<1>(pb, {0}, {3}, plan);
    CHECK(schwartz::classify_trend(rep3.trend) == schwartz::Trend::Geometric);
}
