#include "qslab/schwartz/flatness.hpp"

#include <cmath>

#include "qslab/num/fd.hpp"

namespace qslab::schwartz {

template <int N>
FlatnessReport<N> flatness_check(const TestFunction<N>& f,
                                 const std::vector<FlatnessProbe<N>>& probes, int max_order,
                                 double tol, double step) {
    if (max_order > 4) throw std::invalid_argument("flatness_check: max_order must be <= 4");
    FlatnessReport<N> rep;
    rep.max_order = max_order;
    rep.tol = tol;
    rep.step = step;
    for (const auto& probe : probes) {
        auto ray = [&](double t) -> double {
            Vec<N> x = probe.point;
            for (int i = 0; i < N; ++i) x[i] += t * probe.inward[i];
            try {
                return f.value(x).value();
            } catch (const std::domain_error&) {
                return 0.0;  // extension by zero off the domain
            }
        };
        double max_sample = 0.0;
        for (int j = 0; j <= 5; ++j) max_sample = std::max(max_sample, std::abs(ray(j * step)));
        std::vector<double> coef, thr;
        double factorial = 1.0;
        for (int j = 0; j <= max_order; ++j) {
            if (j > 0) factorial *= j;
            const double dj = num::forward_derivative_1d(ray, 0.0, j, step);
            const double c = std::abs(dj) / factorial;
            const double noise =
                64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, max_sample) /
                (std::pow(step, j) * factorial);
            coef.push_back(c);
            thr.push_back(std::max(tol, noise));
            if (c > thr.back()) rep.pass = false;
        }
        rep.coefficients.push_back(std::move(coef));
        rep.thresholds.push_back(std::move(thr));
    }
    return rep;
}

template FlatnessReport<1> flatness_check<1>(const TestFunction1&,
                                             const std::vector<FlatnessProbe<1>>&, int, double,
                                             double);
template FlatnessReport<2> flatness_check<2>(const TestFunction2&,
                                             const std::vector<FlatnessProbe<2>>&, int, double,
                                             double);

}  // namespace qslab::schwartz
