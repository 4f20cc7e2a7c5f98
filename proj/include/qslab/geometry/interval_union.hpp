#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qslab/num/signed_log.hpp"

namespace qslab::geom {

/// Named interval-length rule n -> a(n), serializable by name so that
/// reports can state exactly which countable union they talk about.
struct LengthSpec {
    enum class Kind { Constant, InverseSquare, ExpDecay };
    Kind kind = Kind::Constant;
    double scale = 1.0;  // multiplies the base rule

    double operator()(int n) const;
    num::SignedLog log_value(int n) const;  // exact for exp decay at large n
    std::string name() const;

    static LengthSpec constant(double c = 1.0) { return {Kind::Constant, c}; }
    static LengthSpec inverse_square() { return {Kind::InverseSquare, 1.0}; }
    static LengthSpec exp_decay() { return {Kind::ExpDecay, 1.0}; }
    static LengthSpec parse(const std::string& s);
};

struct Interval {
    double left = 0.0;
    double right = 0.0;
};

/// Disjoint union of open intervals on the line. The stored order is the
/// enumeration order (the Cantor gaps are enumerated by size, not
/// position); point location goes through a lazily built sorted index.
struct IntervalUnion {
    std::vector<Interval> intervals;

    void validate() const;
    std::size_t size() const { return intervals.size(); }

    /// Index (into `intervals`) of the interval containing x, or nullopt.
    std::optional<std::size_t> find(double x) const;

    /// Signed distance: positive inside an interval, zero on endpoints,
    /// negative outside (Euclidean distance to the union).
    double signed_dist(double x) const;

private:
    const std::vector<std::size_t>& sorted_order() const;
    mutable std::vector<std::size_t> order_;  // built on first lookup
};

/// N_a = union over 1 <= n <= n_max of (n, n + a(n)).
IntervalUnion build_na(const LengthSpec& a, int n_max);

/// Gaps of the middle-thirds Cantor set up to generation `depth`,
/// enumerated by decreasing length then increasing left endpoint:
/// (1/3,2/3), (1/9,2/9), (7/9,8/9), (1/27,2/27), ...
/// Exactly 2^(m-1) intervals of length 3^(-m) for each m <= depth.
IntervalUnion build_cantor_gaps(int depth);

/// Generation of the n-th gap in the enumeration above (1-based):
/// m(n) = floor(log2 n) + 1, so the gap length is 3^(-m).
int cantor_generation(std::size_t n);

/// Left endpoints of the 2^depth closed intervals making up the depth-th
/// Cantor construction step (each of length 3^(-depth)); used as a point
/// sampler for the Cantor set itself.
std::vector<double> cantor_set_points(int depth);

}  // namespace qslab::geom
