#include <doctest.h>

#include <cmath>

#include "qslab/maps/cusp_map.hpp"
#include "qslab/num/rng.hpp"

using namespace qslab;
using geom::Complex;

TEST_CASE("threshold selection on the half-step ladder") {
    const auto linear = maps::make_cusp_map({0.0, 1.0});  // p(u) = u
    CHECK(linear->record().M == doctest::Approx(1.5));
    CHECK(linear->record().degree == 1);
    CHECK(linear->record().lambda == doctest::Approx(1.0));
    const auto quad = maps::make_cusp_map({0.0, 0.0, 1.0});  // p(u) = u^2
    CHECK(quad->record().M == doctest::Approx(1.5));
    CHECK(quad->record().degree == 2);
    // steep linear polynomial: M > 1/lambda matters, p(M) > 1 too
    const auto steep = maps::make_cusp_map({0.0, 4.0});  // p(u) = 4u
    CHECK(steep->record().M == doctest::Approx(0.5));
    CHECK_THROWS_AS(maps::make_cusp_map({1.0}), std::invalid_argument);       // constant
    CHECK_THROWS_AS(maps::make_cusp_map({0.0, -1.0}), std::invalid_argument); // negative lead
}

TEST_CASE("tail formula and tail inverse") {
    const auto m = maps::make_cusp_map({0.0, 1.0});
    // phi_2(3, e^-3/2) = (e^3, 1/2)
    const Complex w = m->eval({3.0, std::exp(-3.0) / 2.0});
    CHECK(w.real() == doctest::Approx(std::exp(3.0)).epsilon(1e-12));
    CHECK(w.imag() == doctest::Approx(0.5).epsilon(1e-12));
    // g(e^5) = 5 for p = id
    CHECK(m->tail_inverse_u(std::exp(5.0)) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("blend positivity: b(M) = 0 and b > 0 on (M, 2M)") {
    for (const auto& poly : {std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 0.0, 1.0}}) {
        const auto m = maps::make_cusp_map(poly);
        const double M = m->record().M;
        CHECK(std::abs(m->b(M)) <= 1e-12);
        for (int i = 1; i < 1000; ++i) {
            const double u = M + (2.0 * M - M) * double(i) / 1000.0;
            CHECK(m->b(u) > 0.0);
        }
    }
}

TEST_CASE("jacobian determinant positive over the blend and tail") {
    for (const auto& poly : {std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 0.0, 1.0}}) {
        const auto m = maps::make_cusp_map(poly);
        const geom::CuspDomain dom{poly};
        const double M = m->record().M;
        for (int i = 1; i <= 200; ++i) {
            const double u = 3.0 * M * double(i) / 201.0;
            const double top = std::exp(-dom.eval_p(u));
            for (int j = 1; j <= 50; ++j) {
                const double v = top * double(j) / 51.0;
                CHECK(m->jacobian_det({u, v}) > 0.0);
            }
        }
    }
}

TEST_CASE("round trip through all three zones") {
    for (const auto& poly : {std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 0.0, 1.0}}) {
        const auto m = maps::make_cusp_map(poly);
        const geom::CuspDomain dom{poly};
        num::Rng rng(31);
        double worst = 0.0;
        for (int i = 0; i < 5000; ++i) {
            const double u = rng.uniform(0.01, 6.0);
            const double v = std::exp(-dom.eval_p(u)) * rng.uniform(0.01, 0.99);
            const Complex z{u, v};
            const Complex back = m->inverse(m->eval(z));
            worst = std::max(worst, std::abs(back - z) / (1.0 + std::abs(z)));
        }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("inverse rejects points outside the strip") {
    const auto m = maps::make_cusp_map({0.0, 1.0});
    CHECK_THROWS_AS(m->inverse({0.5, 0.5}), std::domain_error);
    CHECK_THROWS_AS(m->inverse({2.0, 1.5}), std::domain_error);
    CHECK_THROWS_AS(m->inverse({2.0, -0.5}), std::domain_error);
}

TEST_CASE("exact partials: second coordinate linear in v") {
    const auto m = maps::make_cusp_map({0.0, 1.0});
    const double M = m->record().M;
    const double u = 2.5 * M;  // tail
    const double v = 0.25 * std::exp(-u);
    std::array<double, 2> out{};
    REQUIRE(m->exact_partial({0, 1}, {u, v}, out));
    CHECK(out[0] == doctest::Approx(0.0));
    CHECK(out[1] == doctest::Approx(std::exp(u)).epsilon(1e-12));
    REQUIRE(m->exact_partial({0, 2}, {u, v}, out));
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 0.0);
}

TEST_CASE("exact first partials agree with finite differences") {
    const auto m = maps::make_cusp_map({0.0, 1.0});
    const double M = m->record().M;
    num::Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const double u = rng.uniform(0.2, 3.0 * M);
        const double v = std::exp(-u) * rng.uniform(0.2, 0.8);
        for (const maps::MultiIndex2 k : {maps::MultiIndex2{1, 0}, maps::MultiIndex2{0, 1}}) {
            std::array<double, 2> exact{};
            REQUIRE(m->exact_partial(k, {u, v}, exact));
            for (int comp = 0; comp < 2; ++comp) {
                auto f = [&](num::Vec<2> q) {
                    const Complex w = m->eval(Complex{q[0], q[1]});
                    return comp == 0 ? w.real() : w.imag();
                };
                const auto fd = num::fd_derivative<2>(f, {u, v}, k, v);
                CHECK(fd.value ==
                      doctest::Approx(exact[comp]).epsilon(1e-5).scale(1.0 + std::abs(exact[comp])));
            }
        }
    }
}
