#include <doctest.h>

#include <cmath>

#include "qslab/maps/line_map.hpp"
#include "qslab/num/rng.hpp"

using namespace qslab;
using geom::LengthSpec;

TEST_CASE("interval linear map follows the floor formula") {
    const auto m = maps::make_interval_linear_map(LengthSpec::constant(),
                                                  LengthSpec::inverse_square(), 10);
    // a = 1, b(n) = 1/n^2: phi(2.5) = (1/4)(0.5) + 2 = 2.125
    CHECK(m->eval(2.5) == doctest::Approx(2.125).epsilon(1e-15));
    // derivative on (3, 4) is b(3)/a(3) = 1/9 exactly
    CHECK(m->derivative(1, 3.7) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(m->derivative(2, 3.7) == 0.0);
    CHECK_THROWS_AS(m->eval(3.0), std::domain_error);   // integers are boundary
    CHECK_THROWS_AS(m->eval(0.5), std::domain_error);
    CHECK_THROWS_AS(m->inverse(3.5), std::domain_error);  // outside N_b
}

TEST_CASE("interval linear map round trips exactly") {
    const auto m = maps::make_interval_linear_map(LengthSpec::constant(),
                                                  LengthSpec::inverse_square(), 50);
    num::Rng rng(41);
    for (int i = 0; i < 10000; ++i) {
        const int n = 1 + int(rng.below(50));
        const double x = n + rng.uniform(1e-6, 1.0 - 1e-6);
        const double y = m->eval(x);
        CHECK(y > double(n));
        CHECK(y < double(n) + 1.0 / (double(n) * double(n)) + 1e-15);
        CHECK(m->inverse(y) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("interval map preserves interval count and order") {
    const auto m = maps::make_interval_linear_map(LengthSpec::constant(),
                                                  LengthSpec::exp_decay(), 20);
    REQUIRE(m->domain()->size() == 20);
    REQUIRE(m->image()->size() == 20);
    for (std::size_t n = 0; n < 20; ++n) {
        const auto src = m->domain()->intervals[n];
        const auto dst = m->image()->intervals[n];
        // midpoint of the n-th source interval lands in the n-th target
        const double mid = 0.5 * (src.left + src.right);
        const double y = m->eval(mid);
        CHECK(y > dst.left);
        CHECK(y < dst.right);
    }
}

TEST_CASE("cantor map: enumeration targets and the paper arithmetic") {
    const auto m = maps::make_cantor_map(4);
    // phi(1.5) = midpoint of (1/3, 2/3)
    CHECK(m->eval(1.5) == doctest::Approx(0.5).epsilon(1e-15));
    // x = 1.25 -> y = 5/12
    CHECK(m->eval(1.25) == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
    // scale on interval 2 is 3^-2 (I_2 = (1/9, 2/9))
    CHECK(m->scale(2) == doctest::Approx(1.0 / 9.0));
    CHECK(m->generation(2) == 2);
    CHECK(m->generation(1) == 1);
    CHECK(m->generation(4) == 3);
    CHECK_THROWS_AS(m->eval(0.5), std::domain_error);
    CHECK_THROWS_AS(m->eval(2.0), std::domain_error);
}

TEST_CASE("cantor map distance identity d(x, bd N) = 3^m d(y, bd C')") {
    const auto m = maps::make_cantor_map(10);
    const auto* source = m->domain();
    const auto* gaps = m->image();
    num::Rng rng(43);
    const std::size_t count = gaps->size();
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + rng.below(count);
        const double x = double(n) + rng.uniform(1e-9, 1.0 - 1e-9);
        const double y = m->eval(x);
        const double dx = source->signed_dist(x);
        const double dy = gaps->signed_dist(y);
        const double scale = std::pow(3.0, m->generation(n));
        CHECK(dx == doctest::Approx(scale * dy).epsilon(1e-12));
    }
}

TEST_CASE("cantor map inverse is the exact linear inverse") {
    const auto m = maps::make_cantor_map(8);
    num::Rng rng(47);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + rng.below(m->image()->size());
        const double x = double(n) + rng.uniform(1e-9, 1.0 - 1e-9);
        CHECK(m->inverse(m->eval(x)) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("exp/log maps: directions, derivatives, domains") {
    const auto lg = maps::make_exp_log_map(true);
    CHECK(lg->eval(std::exp(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lg->inverse(2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(lg->eval(-1.0), std::domain_error);
    // d^n/dx^n log x = (-1)^(n-1) (n-1)!/x^n
    CHECK(lg->derivative(1, 2.0) == doctest::Approx(0.5));
    CHECK(lg->derivative(2, 2.0) == doctest::Approx(-0.25));
    CHECK(lg->derivative(3, 2.0) == doctest::Approx(2.0 / 8.0));
    const auto ex = maps::make_exp_log_map(false);
    CHECK(ex->eval(1.5) == doctest::Approx(std::exp(1.5)));
    CHECK(ex->derivative(3, 1.5) == doctest::Approx(std::exp(1.5)));
}

TEST_CASE("line composition and inverse views") {
    const auto lg = maps::make_exp_log_map(true);
    const auto ex = maps::make_exp_log_map(false);
    const auto id = maps::compose_line({lg, ex});  // exp(log x)
    CHECK(id->eval(3.7) == doctest::Approx(3.7).epsilon(1e-14));
    const auto lg_inv = maps::inverse_line_map(lg);
    CHECK(lg_inv->eval(2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    CHECK(lg_inv->derivative(1, 2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
}
