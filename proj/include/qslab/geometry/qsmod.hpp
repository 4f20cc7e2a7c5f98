#pragma once

#include <cstdint>
#include <vector>

#include "qslab/geometry/domain.hpp"
#include "qslab/maps/plane_map.hpp"

namespace qslab::geom {

struct QsBin {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double max_ratio = 0.0;  // max |phi(x)-phi(y)| / |phi(x)-phi(z)| in bin
    double max_t = 0.0;      // max t landing in the bin (identity reference)
    std::size_t count = 0;
};

struct QsModulusTable {
    std::vector<QsBin> bins;
    std::size_t triples = 0;
    std::size_t skipped = 0;  // coincident-point triples
    std::uint64_t seed = 0;
};

struct QsPlan {
    std::size_t n_points = 64;
    std::size_t n_triples = 20000;
    int n_bins = 24;
    std::uint64_t seed = 1;
};

/// Samples point triples (x, y, z) in the domain, bins them by
/// t = |x-y|/|x-z| and records the max distorted ratio per bin: an
/// empirical lower envelope for the distortion gauge. Triples with
/// coincident points are skipped and counted.
QsModulusTable sample_quasisymmetry_modulus(const maps::PlaneMap& map, const DomainSpec& domain,
                                            const QsPlan& plan);

/// Same scan over an explicit point cloud, enumerating every ordered
/// triple (the brute-force cross-check path).
QsModulusTable quasisymmetry_modulus_exhaustive(const maps::PlaneMap& map,
                                                const std::vector<Point2>& points, int n_bins);

}  // namespace qslab::geom
