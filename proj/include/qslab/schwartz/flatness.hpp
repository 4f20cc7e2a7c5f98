#pragma once

#include <vector>

#include "qslab/schwartz/test_function.hpp"

namespace qslab::schwartz {

template <int N>
struct FlatnessProbe {
    Vec<N> point;   // on or outside the domain boundary
    Vec<N> inward;  // unit direction pointing into the domain
};

template <int N>
struct FlatnessReport {
    int max_order = 0;
    double tol = 1e-6;
    double step = 1e-3;
    bool pass = true;
    // coefficients[p][j] = |j-th Taylor coefficient| estimated at probe p
    std::vector<std::vector<double>> coefficients;
    std::vector<std::vector<double>> thresholds;
};

/// One-sided finite-difference estimates of the Taylor coefficients of f
/// along each probe's inward ray. Evaluation outside the domain follows
/// extension-by-zero semantics. PASS requires every coefficient magnitude
/// to stay below max(tol, stencil noise floor at that order).
template <int N>
FlatnessReport<N> flatness_check(const TestFunction<N>& f,
                                 const std::vector<FlatnessProbe<N>>& probes, int max_order,
                                 double tol = 1e-6, double step = 1e-3);

}  // namespace qslab::schwartz
