#include "qslab/verify/fixtures.hpp"

#include <cmath>

namespace qslab::verify {

namespace {

using geom::IntervalDomain;
using geom::IntervalUnion;
using geom::LengthSpec;
using schwartz::TestFunction1;
using schwartz::TestFunction2;

geom::DomainSpec half_line_domain() {
    IntervalUnion u;
    u.intervals.push_back({0.0, 1e300});
    return IntervalDomain{u};
}

geom::DomainSpec full_line_domain() {
    IntervalUnion u;
    u.intervals.push_back({-1e300, 1e300});
    return IntervalDomain{u};
}

std::vector<double> n_decay_coeffs(const IntervalUnion& u) {
    std::vector<double> logs;
    logs.reserve(u.size());
    for (std::size_t n = 1; n <= u.size(); ++n) logs.push_back(-double(n));
    return logs;
}

}  // namespace

TransferPlan default_transfer_plan(int max_k, int max_l, int max_m, std::uint64_t seed) {
    TransferPlan plan;
    plan.max_k = max_k;
    plan.max_l = max_l;
    plan.max_m = max_m;
    plan.grid.levels = 3;
    plan.grid.window0 = 6.0;
    plan.grid.index_window0 = 50;
    plan.grid.base_nodes = 16;
    plan.grid.layers0 = 12;
    plan.grid.seed = seed;
    return plan;
}

TransferEvidence run_cusp_transfer(const std::vector<double>& poly, const TransferPlan& plan) {
    const auto cusp = maps::make_cusp_map(poly);
    const geom::CuspDomain omega{poly};
    const geom::Strip strip{1.0, 1.0};
    const geom::DomainSpec u_domain = omega;
    const geom::DomainSpec v_domain = strip;

    // suite on the strip: a compact box bump and a decaying tail band
    const auto bump_x = schwartz::make_bump(maps::BumpSpec{2.0, 3.0, 4.0, 5.0});
    const auto bump_y = schwartz::make_bump(maps::BumpSpec{0.2, 0.4, 0.6, 0.8});
    const auto band_y = schwartz::make_bump(maps::BumpSpec{0.05, 0.3, 0.7, 0.95});
    const auto tail_x = schwartz::make_shifted(schwartz::make_decaying_tail(), 1.0);
    std::vector<TestFunction2> suite_v = {
        schwartz::make_product(bump_x, bump_y, v_domain, "strip_box_bump"),
        schwartz::make_product(tail_x, band_y, v_domain, "strip_decaying_band"),
    };

    // suite on the cusp: a compact box bump below the wall and the
    // super-decaying band profile. The bump's image under the map must sit
    // inside the smallest strip window, so its u-support stays below 1.2.
    const int deg = int(poly.size()) - 1;
    const geom::CuspDomain cd{poly};
    const double v_hi = std::exp(-cd.eval_p(1.2));
    const auto bump_u = schwartz::make_bump(maps::BumpSpec{0.5, 0.7, 1.0, 1.2});
    const auto bump_v = schwartz::make_bump(
        maps::BumpSpec{0.1 * v_hi, 0.3 * v_hi, 0.6 * v_hi, 0.9 * v_hi});
    std::vector<TestFunction2> suite_u = {
        schwartz::make_product(bump_u, bump_v, u_domain, "cusp_box_bump"),
        schwartz::make_cusp_band(omega, schwartz::make_super_decay(deg + 1),
                                 maps::BumpSpec{0.05, 0.3, 0.7, 0.95}, "cusp_decaying_band"),
    };

    return positive_transfer(cusp, u_domain, v_domain, suite_v, suite_u, plan,
                             "cusp_p" + std::to_string(deg));
}

TransferEvidence run_cantor_transfer(int depth, const TransferPlan& plan) {
    const auto map = maps::make_cantor_map(depth);
    const geom::DomainSpec u_domain = IntervalDomain{*map->domain()};
    const geom::DomainSpec v_domain = IntervalDomain{*map->image()};

    // on the gaps: coefficients exp(-3^m) so every derivative-to-scale
    // ratio still vanishes; on the unit intervals: coefficients exp(-n)
    const auto& gaps = *map->image();
    std::vector<double> gap_logs;
    gap_logs.reserve(gaps.size());
    for (std::size_t n = 1; n <= gaps.size(); ++n)
        gap_logs.push_back(-std::pow(3.0, geom::cantor_generation(n)));
    std::vector<TestFunction1> suite_v = {
        schwartz::make_interval_suite_f(gaps, gap_logs, "gap_bumps")};
    std::vector<TestFunction1> suite_u = {
        schwartz::make_interval_suite_f(*map->domain(), n_decay_coeffs(*map->domain()),
                                        "unit_bumps")};
    return positive_transfer_line(map, u_domain, v_domain, suite_v, suite_u, plan,
                                  "cantor_depth" + std::to_string(depth));
}

TransferEvidence run_interval_transfer(int n_max, const TransferPlan& plan) {
    const auto a = LengthSpec::constant();
    const auto b = LengthSpec::inverse_square();
    const auto map = maps::make_interval_linear_map(a, b, n_max);
    const geom::DomainSpec u_domain = IntervalDomain{*map->domain()};
    const geom::DomainSpec v_domain = IntervalDomain{*map->image()};
    std::vector<TestFunction1> suite_v = {
        schwartz::make_interval_suite_f(*map->image(), n_decay_coeffs(*map->image()),
                                        "nb_bumps")};
    std::vector<TestFunction1> suite_u = {
        schwartz::make_interval_suite_f(*map->domain(), n_decay_coeffs(*map->domain()),
                                        "unit_bumps")};
    return positive_transfer_line(map, u_domain, v_domain, suite_v, suite_u, plan,
                                  "interval_linear_n" + std::to_string(n_max));
}

TransferEvidence run_explog_transfer(const TransferPlan& plan) {
    const auto map = maps::make_exp_log_map(true);  // log : (0, inf) -> R
    const geom::DomainSpec u_domain = half_line_domain();
    const geom::DomainSpec v_domain = full_line_domain();
    std::vector<TestFunction1> suite_v = {schwartz::make_decaying_tail()};
    std::vector<TestFunction1> suite_u = {schwartz::make_decaying_tail()};
    return positive_transfer_line(map, u_domain, v_domain, suite_v, suite_u, plan, "explog");
}

}  // namespace qslab::verify
