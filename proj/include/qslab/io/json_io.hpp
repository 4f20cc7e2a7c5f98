#pragma once

#include <json.hpp>

#include "qslab/geometry/ahlfors.hpp"
#include "qslab/geometry/dimension.hpp"
#include "qslab/geometry/domain.hpp"
#include "qslab/geometry/qsmod.hpp"
#include "qslab/maps/cusp_map.hpp"
#include "qslab/maps/line_map.hpp"
#include "qslab/maps/plane_map.hpp"
#include "qslab/schwartz/flatness.hpp"
#include "qslab/schwartz/sweep.hpp"
#include "qslab/verify/verify.hpp"

namespace qslab::io {

using nlohmann::json;

// log-scale scalars serialize as {"log": true, "sign": s, "ln": v}
json to_json(const num::SignedLog& v);
num::SignedLog signed_log_from_json(const json& j);

json to_json(const geom::Point2& p);

// Curve file: {"closed": bool, "points": [[x, y], ...]}
json to_json(const geom::ClosedCurve& c);
geom::ClosedCurve curve_from_json(const json& j);

// Interval file: [[left, right], ...]
json to_json(const geom::IntervalUnion& u);
geom::IntervalUnion interval_union_from_json(const json& j);

// Domain specs: tagged union {"type": ..., ...}
json to_json(const geom::DomainSpec& d);
geom::DomainSpec domain_from_json(const json& j);

// Map specs: tagged union {"family": ..., ...}. Reports echo the spec
// they were built from, so only parsing is needed here.
maps::PlaneMapPtr plane_map_from_json(const json& j);
maps::LineMapPtr line_map_from_json(const json& j);

json to_json(const geom::AhlforsResult& r);
json to_json(const geom::DimensionReport& r);
json to_json(const geom::QsModulusTable& t);

template <int N>
json to_json(const schwartz::SeminormReport<N>& r);
template <int N>
json to_json(const schwartz::DecayReport<N>& r);
template <int N>
json to_json(const schwartz::FlatnessReport<N>& r);

json to_json(const verify::HolderFit& f);
json to_json(const verify::MoriFit& f);
json to_json(const verify::BlowupReport& r);
json to_json(const verify::TransferEvidence& e);
json to_json(const verify::ObstructionCertificate& c);
verify::ObstructionCertificate certificate_from_json(const json& j);

/// Canonical dump used by every report writer (re-parses bit-exactly, so
/// replayed certificates compare byte-identical).
std::string dump_report(const json& j);

}  // namespace qslab::io
