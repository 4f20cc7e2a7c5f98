#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>

namespace qslab::num {

template <int N>
using Vec = std::array<double, N>;

template <int N>
using MultiIndex = std::array<int, N>;

template <int N>
int order(const MultiIndex<N>& k) {
    int s = 0;
    for (int v : k) s += v;
    return s;
}

struct FdValue {
    double value = 0.0;
    double step = 0.0;
    bool step_warning = false;  // step so small that stencil noise may dominate
};

/// Nested central differences on a memoized integer offset lattice.
///
/// Each requested axis derivative applies the 4th-order 5-point stencil
///   g'(x) ~ (-g(x+2h) + 8 g(x+h) - 8 g(x-h) + g(x-2h)) / (12 h)
/// and higher / mixed orders nest the stencil. The step shrinks with the
/// distance to the domain boundary so the full stencil reach (2|k| steps)
/// stays inside the domain.
template <int N, class F>
class FdEngine {
public:
    FdEngine(F f, Vec<N> x, double step) : f_(std::move(f)), x_(x), h_(step) {}

    double derivative(const MultiIndex<N>& k) {
        MultiIndex<N> off{};
        return rec(k, off);
    }

    double step() const { return h_; }

private:
    double rec(const MultiIndex<N>& k, const MultiIndex<N>& off) {
        if (order<N>(k) == 0) return value_at(off);
        int axis = 0;
        while (k[axis] == 0) ++axis;
        MultiIndex<N> k1 = k;
        k1[axis] -= 1;
        MultiIndex<N> o = off;
        o[axis] = off[axis] + 2;
        const double p2 = rec(k1, o);
        o[axis] = off[axis] + 1;
        const double p1 = rec(k1, o);
        o[axis] = off[axis] - 1;
        const double m1 = rec(k1, o);
        o[axis] = off[axis] - 2;
        const double m2 = rec(k1, o);
        return (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h_);
    }

    double value_at(const MultiIndex<N>& off) {
        auto it = cache_.find(off);
        if (it != cache_.end()) return it->second;
        Vec<N> p = x_;
        for (int i = 0; i < N; ++i) p[i] += h_ * off[i];
        const double v = f_(p);
        cache_.emplace(off, v);
        return v;
    }

    F f_;
    Vec<N> x_;
    double h_;
    std::map<MultiIndex<N>, double> cache_;
};

/// Step rule: min(h0, d / (4 |k|)) so the nested stencil reach 2|k|*h
/// stays within half the boundary distance d.
inline double fd_step(int total_order, double dist_to_boundary, double h0 = 1e-3) {
    if (total_order < 1) total_order = 1;
    double h = h0;
    if (std::isfinite(dist_to_boundary) && dist_to_boundary > 0.0)
        h = std::min(h0, dist_to_boundary / (4.0 * total_order));
    return h;
}

template <int N, class F>
FdValue fd_derivative(F f, Vec<N> x, const MultiIndex<N>& k, double dist_to_boundary,
                      double h0 = 1e-3) {
    FdValue out;
    out.step = fd_step(order<N>(k), dist_to_boundary, h0);
    out.step_warning = out.step < 1e-8;
    FdEngine<N, F> eng(std::move(f), x, out.step);
    out.value = eng.derivative(k);
    return out;
}

/// One-sided forward stencils for derivative estimation at a boundary
/// point, sampling only at x + j*h*dir, j = 0..5. Coefficients are the
/// standard 2nd-order forward-difference weights.
template <class F>
double forward_derivative_1d(F f, double x, int n, double h) {
    static const double w1[] = {-1.5, 2.0, -0.5};
    static const double w2[] = {2.0, -5.0, 4.0, -1.0};
    static const double w3[] = {-2.5, 9.0, -12.0, 7.0, -1.5};
    static const double w4[] = {3.0, -14.0, 26.0, -24.0, 11.0, -2.0};
    const double* w = nullptr;
    int m = 0;
    switch (n) {
        case 0: return f(x);
        case 1: w = w1; m = 3; break;
        case 2: w = w2; m = 4; break;
        case 3: w = w3; m = 5; break;
        case 4: w = w4; m = 6; break;
        default: return std::numeric_limits<double>::quiet_NaN();
    }
    double acc = 0.0;
    for (int j = 0; j < m; ++j) acc += w[j] * f(x + j * h);
    return acc / std::pow(h, n);
}

}  // namespace qslab::num
