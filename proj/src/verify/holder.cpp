#include <cmath>

#include "qslab/num/fit.hpp"
#include "qslab/verify/verify.hpp"

namespace qslab::verify {

namespace {

using geom::Complex;
using geom::Point2;
using schwartz::LevelGrid;

}  // namespace

HolderFit fit_holder_pairs(const std::vector<std::array<double, 2>>& dist_pairs,
                           double violation_tol_log) {
    std::vector<double> lx, ly;
    lx.reserve(dist_pairs.size());
    ly.reserve(dist_pairs.size());
    for (const auto& pr : dist_pairs) {
        if (!(pr[0] > 0.0) || !(pr[1] > 0.0)) continue;
        lx.push_back(std::log(pr[0]));
        ly.push_back(std::log(pr[1]));
    }
    if (lx.size() < 2) throw std::invalid_argument("holder fit: not enough positive samples");
    num::LineFit fit;
    try {
        fit = num::fit_line(lx, ly);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("holder fit: degenerate (all samples at one distance)");
    }
    HolderFit h;
    h.alpha = fit.slope;
    h.C = std::exp(fit.intercept);
    h.residual = fit.max_residual;
    h.r2 = fit.r2;
    h.samples = lx.size();
    h.violation = fit.max_residual > violation_tol_log;
    return h;
}

HolderFit check_holder_distortion(const maps::PlaneMap& map, const geom::DomainSpec& u_domain,
                                  const geom::DistanceOracle& u_oracle,
                                  const geom::DistanceOracle& v_oracle, const SamplePlan& plan,
                                  double d_cut) {
    std::vector<std::array<double, 2>> pairs;
    for (const auto& grid : schwartz::make_grids<2>(u_domain, plan)) {
        for (const auto& node : grid.nodes) {
            const Point2 p{node[0], node[1]};
            const double du = u_oracle.signed_dist(p);
            if (!(du > 0.0) || du > d_cut) continue;
            const double dv = v_oracle.signed_dist(map.eval(p));
            if (!(dv > 0.0)) continue;
            pairs.push_back({du, dv});
        }
    }
    return fit_holder_pairs(pairs);
}

HolderFit check_holder_distortion_line(const maps::LineMap& map,
                                       const geom::DomainSpec& u_domain,
                                       const geom::DistanceOracle& u_oracle,
                                       const geom::DistanceOracle& v_oracle,
                                       const SamplePlan& plan, double d_cut) {
    std::vector<std::array<double, 2>> pairs;
    for (const auto& grid : schwartz::make_grids<1>(u_domain, plan)) {
        for (const auto& node : grid.nodes) {
            const double du = u_oracle.signed_dist({node[0], 0.0});
            if (!(du > 0.0) || du > d_cut) continue;
            const double dv = v_oracle.signed_dist({map.eval(node[0]), 0.0});
            if (!(dv > 0.0)) continue;
            pairs.push_back({du, dv});
        }
    }
    return fit_holder_pairs(pairs);
}

BlowupReport check_derivative_blowup(const maps::PlaneMap& map, const geom::DomainSpec& u_domain,
                                     const geom::DistanceOracle& u_oracle, int order,
                                     const SamplePlan& plan) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("derivative blowup: order must be in [1, 3]");
    if (!map.is_holomorphic())
        throw std::invalid_argument("derivative blowup: needs a conformal family");
    BlowupReport rep;
    rep.order = order;
    SignedLog sup;
    Point2 argmax{0.0, 0.0};
    for (const auto& grid : schwartz::make_grids<2>(u_domain, plan)) {
        for (const auto& node : grid.nodes) {
            const Point2 p{node[0], node[1]};
            const double d = u_oracle.signed_dist(p);
            if (!(d > 0.0)) continue;
            const Complex der = map.complex_derivative(order, p.cx());
            const SignedLog cand =
                SignedLog::of(std::abs(der)) * SignedLog::of(d).pow_int(order);
            if (cand > sup) {
                sup = cand;
                argmax = p;
            }
        }
        rep.trend.push_back(sup);
    }
    rep.sup = sup;
    rep.argmax = argmax;
    rep.classification = schwartz::classify_trend(rep.trend);
    rep.pass = rep.classification == Trend::Stable;
    return rep;
}

MoriFit mori_exponent(const maps::PlaneMap& map,
                      const std::vector<std::array<Complex, 2>>& pairs,
                      double violation_tol_log) {
    std::vector<std::array<double, 2>> fwd, inv;
    fwd.reserve(pairs.size());
    inv.reserve(pairs.size());
    for (const auto& pr : pairs) {
        const Complex fx = map.eval(pr[0]);
        const Complex fy = map.eval(pr[1]);
        const double dx = std::abs(pr[0] - pr[1]);
        const double dfx = std::abs(fx - fy);
        if (dx > 0.0 && dfx > 0.0) {
            fwd.push_back({dx, dfx});
            inv.push_back({dfx, dx});  // inverse map distances, same point pairs
        }
    }
    const HolderFit f = fit_holder_pairs(fwd, violation_tol_log);
    const HolderFit i = fit_holder_pairs(inv, violation_tol_log);
    MoriFit m;
    m.alpha_forward = f.alpha;
    m.alpha_inverse = i.alpha;
    m.r2_forward = f.r2;
    m.r2_inverse = i.r2;
    m.residual_forward = f.residual;
    m.residual_inverse = i.residual;
    m.violation = f.violation || i.violation;
    return m;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Supported: return "supported";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace qslab::verify
