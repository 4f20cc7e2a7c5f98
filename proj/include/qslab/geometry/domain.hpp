#pragma once

#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qslab/geometry/curve.hpp"
#include "qslab/geometry/interval_union.hpp"
#include "qslab/geometry/point.hpp"
#include "qslab/num/signed_log.hpp"

namespace qslab::geom {

using num::SignedLog;

// ---------------------------------------------------------------------------
// Domain variants
// ---------------------------------------------------------------------------

struct Disc {};          // open unit disc
struct ExteriorDisc {};  // complement of the closed unit disc
struct HalfPlane {};     // upper half plane y > 0

/// One-sided strip: x > x_min, 0 < y < height.
struct Strip {
    double x_min = 1.0;
    double height = 1.0;
};

/// Exponential cusp: 0 < u, 0 < v < exp(-p(u)). The polynomial p is stored
/// by coefficients, lowest degree first; it must be non-constant with a
/// positive leading coefficient.
struct CuspDomain {
    std::vector<double> p;
    void validate() const;
    double eval_p(double u) const;
    double eval_dp(double u) const;
    int degree() const { return int(p.size()) - 1; }
};

/// Chain of discs B(n, 1/n^2) joined by strips (n, n+1) x (-h_n/2, h_n/2)
/// with log h_n = -exp(n^2), for 1 <= n <= n_max. Strip heights are kept
/// in log space; they underflow doubles from n = 3 on.
struct NazarovDomain {
    int n_max = 1;
    double disc_radius(int n) const { return 1.0 / (double(n) * double(n)); }
    /// log of h_n / 2
    double log_half_height(int n) const { return -std::exp(double(n) * double(n)) - std::log(2.0); }
};

struct PolygonDomain {
    ClosedCurve boundary;  // simple closed polyline
};

/// Complement of a polyline slit in the plane.
struct SlitPlane {
    ClosedCurve slit;
};

struct IntervalDomain {
    IntervalUnion u;
};

using DomainSpec = std::variant<Disc, ExteriorDisc, HalfPlane, Strip, CuspDomain, NazarovDomain,
                                PolygonDomain, SlitPlane, IntervalDomain>;

/// 1 for line domains, 2 for planar domains.
int ambient_dim(const DomainSpec& d);

/// NazarovDomain(n_max) with parameter validation (1 <= n_max <= 40).
DomainSpec build_nazarov_domain(int n_max);

// ---------------------------------------------------------------------------
// Distance oracle
// ---------------------------------------------------------------------------

struct ExteriorPointError : std::domain_error {
    double signed_distance;
    explicit ExteriorPointError(double d)
        : std::domain_error("exterior point"), signed_distance(d) {}
};

/// Distance to the domain boundary. Positive inside the open domain, zero
/// on the boundary, negative outside (Euclidean distance to the closure).
/// Exact oracles are closed-form case analyses; sampled oracles measure
/// against a dense boundary discretization of resolution h.
class DistanceOracle {
public:
    enum class Mode { Exact, Sampled };

    virtual ~DistanceOracle() = default;
    virtual Mode mode() const = 0;
    virtual double resolution() const { return 0.0; }

    /// Full-precision signed distance; log-space exact for domains whose
    /// features underflow plain doubles.
    virtual SignedLog signed_log_dist(Point2 p) const = 0;

    double signed_dist(Point2 p) const { return signed_log_dist(p).value(); }

    /// Strict-mode query: throws ExteriorPointError for points outside the
    /// closed domain, carrying the negative-convention distance.
    double dist(Point2 p) const {
        const double d = signed_dist(p);
        if (d < 0.0) throw ExteriorPointError(d);
        return d;
    }
};

using OraclePtr = std::shared_ptr<const DistanceOracle>;

/// Exact oracle for any domain variant.
OraclePtr make_exact_oracle(const DomainSpec& d);

/// Sampled oracle: brute-force minimum over a boundary discretization at
/// resolution h (boundary points interior to the domain's other components
/// are filtered out). Interior membership, and hence the distance sign,
/// stays exact.
OraclePtr make_sampled_oracle(const DomainSpec& d, double h);

/// Pointwise minimum of two oracles: the exact oracle of an intersection
/// of domains. Used for composite fixtures such as a disc minus a slit.
OraclePtr min_oracle(OraclePtr a, OraclePtr b);

/// True if p lies in the open domain.
bool contains(const DomainSpec& d, Point2 p);

/// Boundary discretization at arc-length resolution h (already filtered
/// against the domain's own interior).
std::vector<Point2> boundary_points(const DomainSpec& d, double h);

}  // namespace qslab::geom
