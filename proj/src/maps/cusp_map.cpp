#include "qslab/maps/cusp_map.hpp"

#include <algorithm>
#include <cmath>

#include "qslab/num/roots.hpp"

namespace qslab::maps {

namespace {

/// Upper bound on real roots of the polynomial (Cauchy bound).
double cauchy_bound(const std::vector<double>& c) {
    const double top = c.back();
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i] / top));
    return 1.0 + m;
}

bool admissible_m(const geom::CuspDomain& dom, double m_cand) {
    if (!(dom.eval_p(m_cand) > 1.0)) return false;
    const int deg = dom.degree();
    if (deg == 1) {
        const double lambda = dom.p[1];
        return m_cand > 1.0 / lambda;
    }
    if (!(m_cand > 1.0)) return false;
    // need p'(u) > 1 for all u > M: check out to past every root of p' - 1
    std::vector<double> dp(dom.p.size() - 1);
    for (std::size_t i = 1; i < dom.p.size(); ++i) dp[i - 1] = double(i) * dom.p[i];
    dp[0] -= 1.0;
    const double reach = std::max(cauchy_bound(dp) + 1.0, m_cand + 1.0);
    const int kNodes = 4096;
    for (int i = 1; i <= kNodes; ++i) {
        const double u = m_cand + (reach - m_cand) * double(i) / kNodes;
        if (!(dom.eval_dp(u) > 1.0)) return false;
    }
    return true;
}

}  // namespace

CuspMap::CuspMap(std::vector<double> poly)
    : dom_{std::move(poly)}, chi_(BumpSpec::rising(0.0, 1.0)) {
    dom_.validate();
    const int deg = dom_.degree();
    if (deg == 1 && !(dom_.p[1] > 0.0))
        throw std::invalid_argument("cusp map: degree-1 polynomial needs positive slope");
    double m = 0.0;
    bool found = false;
    for (int step = 1; step <= 400; ++step) {
        m = 0.5 * double(step);
        if (admissible_m(dom_, m)) { found = true; break; }
    }
    if (!found) throw std::invalid_argument("cusp map: no admissible M on the ladder");
    rec_.p = dom_.p;
    rec_.M = m;
    rec_.degree = deg;
    if (deg == 1) {
        rec_.mu = dom_.p[0];
        rec_.lambda = dom_.p[1];
    }
    chi_ = Bump(BumpSpec::rising(m, 2.0 * m));
    ep_m_ = std::exp(dom_.eval_p(m));
    slope_ = (ep_m_ - 1.0) / m;
}

double CuspMap::chi(double u) const { return chi_(u); }
double CuspMap::chi_d1(double u) const { return chi_.derivative(1, u); }

double CuspMap::a(double u) const {
    const double c = chi(u);
    const double linear = slope_ * u + 1.0;
    if (c == 0.0) return linear;
    const double expo = std::exp(dom_.eval_p(u));
    return (1.0 - c) * linear + c * expo;
}

double CuspMap::b(double u) const {
    return std::exp(dom_.eval_p(u)) - (slope_ * u + 1.0);
}

double CuspMap::a_prime(double u) const {
    const double c = chi(u);
    const double dc = chi_d1(u);
    const double linear = slope_ * u + 1.0;
    double out = (1.0 - c) * slope_;
    if (c != 0.0 || dc != 0.0) {
        const double expo = std::exp(dom_.eval_p(u));
        out += dc * (expo - linear) + c * expo * dom_.eval_dp(u);
    }
    return out;
}

Complex CuspMap::eval(Complex z) const {
    const double u = z.real(), v = z.imag();
    if (!(u > 0.0)) throw std::domain_error("cusp map: point outside the cusp domain");
    const double ep = std::exp(dom_.eval_p(u));
    return {a(u), v * ep};
}

double CuspMap::tail_inverse_u(double x) const {
    const double target = std::log(x);
    const int deg = dom_.degree();
    double hi = 2.0 * rec_.M + 1.0;
    while (dom_.eval_p(hi) < target) hi *= 2.0;
    double guess = std::pow(std::max(target, 1.0), 1.0 / double(deg));
    return num::newton_increasing([&](double u) { return dom_.eval_p(u); },
                                  [&](double u) { return dom_.eval_dp(u); }, target,
                                  2.0 * rec_.M, hi, guess, 1e-12, 80);
}

Complex CuspMap::inverse(Complex w) const {
    const double x = w.real(), y = w.imag();
    if (!(x > 1.0) || !(y > 0.0) || !(y < 1.0))
        throw std::domain_error("cusp map: inverse query outside the strip");
    double u;
    if (x <= ep_m_) {
        u = (x - 1.0) / slope_;
    } else if (x >= std::exp(dom_.eval_p(2.0 * rec_.M))) {
        u = tail_inverse_u(x);
        return {u, y / x};
    } else {
        u = num::bisect_increasing([&](double t) { return a(t); }, x, rec_.M, 2.0 * rec_.M,
                                   1e-15, 200);
    }
    return {u, y * std::exp(-dom_.eval_p(u))};
}

std::array<double, 4> CuspMap::jacobian(Point2 p) const {
    const double u = p.x, v = p.y;
    const double ep = std::exp(dom_.eval_p(u));
    const double dp = dom_.eval_dp(u);
    return {a_prime(u), 0.0, v * ep * dp, ep};
}

double CuspMap::jacobian_det(Point2 p) const {
    const auto j = jacobian(p);
    return j[0] * j[3] - j[1] * j[2];
}

bool CuspMap::exact_partial(const MultiIndex2& k, Point2 p, std::array<double, 2>& out) const {
    const int n = k[0] + k[1];
    if (n == 0) {
        const Complex w = eval(p.cx());
        out = {w.real(), w.imag()};
        return true;
    }
    const auto j = jacobian(p);
    if (k[0] == 1 && k[1] == 0) {
        out = {j[0], j[2]};
        return true;
    }
    if (k[0] == 0 && k[1] == 1) {
        out = {j[1], j[3]};
        return true;
    }
    // second coordinate is linear in v: d^2/dv^2 vanishes, dx/dv too
    if (k[0] == 0 && k[1] >= 2) {
        out = {0.0, 0.0};
        return true;
    }
    return false;
}

std::shared_ptr<const CuspMap> make_cusp_map(std::vector<double> poly) {
    return std::make_shared<CuspMap>(std::move(poly));
}

}  // namespace qslab::maps
