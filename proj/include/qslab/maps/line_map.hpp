#pragma once

#include <memory>
#include <string>

#include "qslab/geometry/interval_union.hpp"

namespace qslab::maps {

/// One-dimensional diffeomorphism between countable unions of intervals
/// (or half-lines), with exact inverse and exact derivatives.
class LineMap {
public:
    virtual ~LineMap() = default;
    virtual std::string family() const = 0;
    virtual double eval(double x) const = 0;
    virtual double inverse(double y) const = 0;
    virtual double derivative(int order, double x) const = 0;
    virtual const geom::IntervalUnion* domain() const { return nullptr; }
    virtual const geom::IntervalUnion* image() const { return nullptr; }
};

using LineMapPtr = std::shared_ptr<const LineMap>;

/// Piecewise-linear bijection N_a -> N_b sending (n, n+a(n)) to
/// (n, n+b(n)) by x -> (b(n)/a(n)) (x - n) + n with n = floor(x).
LineMapPtr make_interval_linear_map(const geom::LengthSpec& a, const geom::LengthSpec& b,
                                    int n_max);

/// Bijection from the 2^depth - 1 unit intervals (n, n+1) onto the Cantor
/// gap enumeration: the n-th unit interval maps linearly onto the n-th
/// gap, whose length is 3^(-m) with m = floor(log2 n) + 1.
class CantorLineMap : public LineMap {
public:
    virtual double scale(std::size_t n) const = 0;      // 3^(-m) on interval n
    virtual int generation(std::size_t n) const = 0;    // m
};

std::shared_ptr<const CantorLineMap> make_cantor_map(int depth);

/// Example fixture: log : (0, inf) -> R (or exp : R -> (0, inf) when
/// log_direction is false). Exact derivatives of all orders.
LineMapPtr make_exp_log_map(bool log_direction = true);

/// Pipeline composition of line maps.
LineMapPtr compose_line(std::vector<LineMapPtr> maps);

/// View of a map with eval and inverse swapped.
LineMapPtr inverse_line_map(LineMapPtr m);

}  // namespace qslab::maps
