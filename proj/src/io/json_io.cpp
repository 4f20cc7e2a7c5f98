#include "qslab/io/json_io.hpp"

namespace qslab::io {

namespace {

json complex_to_json(const geom::Complex& z) { return json::array({z.real(), z.imag()}); }

geom::Complex complex_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

template <class V>
json trend_to_json(const std::vector<V>& trend) {
    json arr = json::array();
    for (const auto& v : trend) arr.push_back(to_json(v));
    return arr;
}

}  // namespace

json to_json(const num::SignedLog& v) {
    return json{{"log", true}, {"sign", v.sign}, {"ln", v.ln}};
}

num::SignedLog signed_log_from_json(const json& j) {
    return num::SignedLog::from_log(j.at("sign").get<int>(), j.at("ln").get<double>());
}

json to_json(const geom::Point2& p) { return json::array({p.x, p.y}); }

json to_json(const geom::ClosedCurve& c) {
    json pts = json::array();
    for (const auto& v : c.vertices) pts.push_back(to_json(v));
    json out{{"closed", c.closed}, {"points", std::move(pts)}};
    if (c.unbounded_window)
        out["window"] = json::array({c.unbounded_window->first, c.unbounded_window->second});
    return out;
}

geom::ClosedCurve curve_from_json(const json& j) {
    geom::ClosedCurve c;
    c.closed = j.at("closed").get<bool>();
    for (const auto& p : j.at("points"))
        c.vertices.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    if (j.contains("window"))
        c.unbounded_window = {j["window"].at(0).get<double>(), j["window"].at(1).get<double>()};
    c.validate();
    return c;
}

json to_json(const geom::IntervalUnion& u) {
    json arr = json::array();
    for (const auto& iv : u.intervals) arr.push_back(json::array({iv.left, iv.right}));
    return arr;
}

geom::IntervalUnion interval_union_from_json(const json& j) {
    geom::IntervalUnion u;
    for (const auto& iv : j) u.intervals.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    return u;
}

json to_json(const geom::DomainSpec& d) {
    return std::visit(
        [&](const auto& dom) -> json {
            using T = std::decay_t<decltype(dom)>;
            if constexpr (std::is_same_v<T, geom::Disc>) {
                return json{{"type", "disc"}};
            } else if constexpr (std::is_same_v<T, geom::ExteriorDisc>) {
                return json{{"type", "exterior_disc"}};
            } else if constexpr (std::is_same_v<T, geom::HalfPlane>) {
                return json{{"type", "half_plane"}};
            } else if constexpr (std::is_same_v<T, geom::Strip>) {
                return json{{"type", "strip"}, {"x_min", dom.x_min}, {"height", dom.height}};
            } else if constexpr (std::is_same_v<T, geom::CuspDomain>) {
                return json{{"type", "cusp"}, {"p", dom.p}};
            } else if constexpr (std::is_same_v<T, geom::NazarovDomain>) {
                return json{{"type", "nazarov"}, {"n_max", dom.n_max}};
            } else if constexpr (std::is_same_v<T, geom::PolygonDomain>) {
                return json{{"type", "polygon"}, {"boundary", to_json(dom.boundary)}};
            } else if constexpr (std::is_same_v<T, geom::SlitPlane>) {
                return json{{"type", "slit_plane"}, {"slit", to_json(dom.slit)}};
            } else {
                static_assert(std::is_same_v<T, geom::IntervalDomain>);
                return json{{"type", "intervals"}, {"intervals", to_json(dom.u)}};
            }
        },
        d);
}

geom::DomainSpec domain_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "disc") return geom::Disc{};
    if (type == "exterior_disc") return geom::ExteriorDisc{};
    if (type == "half_plane") return geom::HalfPlane{};
    if (type == "strip")
        return geom::Strip{j.at("x_min").get<double>(), j.at("height").get<double>()};
    if (type == "cusp") {
        geom::CuspDomain c{j.at("p").get<std::vector<double>>()};
        c.validate();
        return c;
    }
    if (type == "nazarov") return geom::build_nazarov_domain(j.at("n_max").get<int>());
    if (type == "polygon") return geom::PolygonDomain{curve_from_json(j.at("boundary"))};
    if (type == "slit_plane") return geom::SlitPlane{curve_from_json(j.at("slit"))};
    if (type == "intervals")
        return geom::IntervalDomain{interval_union_from_json(j.at("intervals"))};
    throw std::invalid_argument("unknown domain type: " + type);
}

maps::PlaneMapPtr plane_map_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "mobius")
        return maps::make_mobius(complex_from_json(j.at("a")), complex_from_json(j.at("b")),
                                 complex_from_json(j.at("c")), complex_from_json(j.at("d")));
    if (family == "square") return maps::make_square();
    if (family == "sqrt_branch")
        return maps::make_sqrt_branch(j.at("cut_angle").get<double>(),
                                      complex_from_json(j.at("base_point")),
                                      complex_from_json(j.at("base_value")));
    if (family == "planar_exp") return maps::make_planar_exp();
    if (family == "cusp") return maps::make_cusp_map(j.at("p").get<std::vector<double>>());
    if (family == "composition") {
        std::vector<maps::PlaneMapPtr> parts;
        for (const auto& part : j.at("maps")) parts.push_back(plane_map_from_json(part));
        return maps::compose(std::move(parts));
    }
    throw std::invalid_argument("unknown plane map family: " + family);
}

maps::LineMapPtr line_map_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "interval_linear")
        return maps::make_interval_linear_map(
            geom::LengthSpec::parse(j.at("a").get<std::string>()),
            geom::LengthSpec::parse(j.at("b").get<std::string>()), j.at("n_max").get<int>());
    if (family == "cantor") return maps::make_cantor_map(j.at("depth").get<int>());
    if (family == "log") return maps::make_exp_log_map(true);
    if (family == "exp") return maps::make_exp_log_map(false);
    throw std::invalid_argument("unknown line map family: " + family);
}

json to_json(const geom::AhlforsResult& r) {
    return json{{"constant", r.constant}, {"witness", json::array({r.i, r.j})}};
}

json to_json(const geom::DimensionReport& r) {
    return json{{"scales", r.scales},
                {"counts", r.counts},
                {"slope", r.slope},
                {"fit_quality", r.fit_quality}};
}

json to_json(const geom::QsModulusTable& t) {
    json bins = json::array();
    for (const auto& b : t.bins) {
        if (b.count == 0) continue;
        bins.push_back(json{{"t_lo", b.t_lo},
                            {"t_hi", b.t_hi},
                            {"max_ratio", b.max_ratio},
                            {"max_t", b.max_t},
                            {"count", b.count}});
    }
    return json{
        {"bins", std::move(bins)}, {"triples", t.triples}, {"skipped", t.skipped}, {"seed", t.seed}};
}

namespace {

template <int N>
json sup_report_core(const schwartz::SupReport<N>& r) {
    json out{{"function", r.function},
             {"sup", to_json(r.sup)},
             {"argmax", std::vector<double>(r.argmax.begin(), r.argmax.end())},
             {"trend", trend_to_json(r.trend)},
             {"node_counts", r.node_counts},
             {"windows", r.windows},
             {"seed", r.seed},
             {"fd_warnings", r.fd_warnings}};
    return out;
}

}  // namespace

template <int N>
json to_json(const schwartz::SeminormReport<N>& r) {
    json out = sup_report_core<N>(r);
    out["kind"] = "seminorm";
    out["k"] = std::vector<int>(r.k.begin(), r.k.end());
    out["l"] = std::vector<int>(r.l.begin(), r.l.end());
    return out;
}

template json to_json<1>(const schwartz::SeminormReport<1>&);
template json to_json<2>(const schwartz::SeminormReport<2>&);

template <int N>
json to_json(const schwartz::DecayReport<N>& r) {
    json out = sup_report_core<N>(r);
    out["kind"] = "decay";
    out["m"] = r.m;
    return out;
}

template json to_json<1>(const schwartz::DecayReport<1>&);
template json to_json<2>(const schwartz::DecayReport<2>&);

template <int N>
json to_json(const schwartz::FlatnessReport<N>& r) {
    return json{{"max_order", r.max_order},
                {"tol", r.tol},
                {"step", r.step},
                {"pass", r.pass},
                {"coefficients", r.coefficients},
                {"thresholds", r.thresholds}};
}

template json to_json<1>(const schwartz::FlatnessReport<1>&);
template json to_json<2>(const schwartz::FlatnessReport<2>&);

json to_json(const verify::HolderFit& f) {
    return json{{"alpha", f.alpha},     {"C", f.C},
                {"residual", f.residual}, {"r2", f.r2},
                {"samples", f.samples}, {"violation", f.violation},
                {"direction", f.direction}};
}

json to_json(const verify::MoriFit& f) {
    return json{{"alpha_forward", f.alpha_forward},
                {"alpha_inverse", f.alpha_inverse},
                {"r2_forward", f.r2_forward},
                {"r2_inverse", f.r2_inverse},
                {"residual_forward", f.residual_forward},
                {"residual_inverse", f.residual_inverse},
                {"violation", f.violation}};
}

json to_json(const verify::BlowupReport& r) {
    return json{{"order", r.order},
                {"trend", trend_to_json(r.trend)},
                {"sup", to_json(r.sup)},
                {"argmax", to_json(r.argmax)},
                {"trend_class", schwartz::trend_name(r.classification)},
                {"pass", r.pass}};
}

json to_json(const verify::TransferEvidence& e) {
    json recs = json::array();
    for (const auto& r : e.records) {
        json rec{{"function", r.function},
                 {"direction", r.direction},
                 {"kind", r.kind},
                 {"trend", schwartz::trend_name(r.trend)},
                 {"values", trend_to_json(r.values)}};
        if (r.kind == "seminorm") {
            rec["k"] = r.k;
            rec["l"] = r.l;
        } else {
            rec["m"] = r.m;
        }
        recs.push_back(std::move(rec));
    }
    return json{{"map", e.map_id},
                {"verdict", verify::verdict_name(e.verdict)},
                {"records", std::move(recs)},
                {"seed", e.seed}};
}

json to_json(const verify::ObstructionCertificate& c) {
    json entries = json::array();
    for (const auto& e : c.entries) {
        json je{{"n", e.n}, {"margin", to_json(e.margin)}, {"witness_x", e.witness_x}};
        if (c.scenario == "nazarov") {
            je["log_disc_dist"] = e.log_disc_dist;
            je["log_gamma_bound"] = e.log_gamma_bound;
            je["strip_loglog"] = e.strip_loglog;
        } else {
            je["log_ratio"] = e.log_ratio;
        }
        entries.push_back(std::move(je));
    }
    json out{{"scenario", c.scenario},
             {"entries", std::move(entries)},
             {"margins_monotone", c.margins_monotone}};
    if (c.scenario == "nazarov") {
        out["C"] = c.C;
        out["n_lo"] = c.n_lo;
        out["n_hi"] = c.n_hi;
        out["minimal_positive_n"] = c.minimal_positive_n;
    } else {
        out["a"] = c.a_name;
        out["bijection"] = c.bijection;
        out["first_ratio_above_1e6"] = c.first_ratio_above_1e6;
        out["divergence"] = c.divergence;
    }
    return out;
}

verify::ObstructionCertificate certificate_from_json(const json& j) {
    verify::ObstructionCertificate c;
    c.scenario = j.at("scenario").get<std::string>();
    if (c.scenario == "nazarov") {
        c.C = j.at("C").get<double>();
        c.n_lo = j.at("n_lo").get<int>();
        c.n_hi = j.at("n_hi").get<int>();
        c.minimal_positive_n = j.at("minimal_positive_n").get<int>();
    } else if (c.scenario == "intervals") {
        c.a_name = j.at("a").get<std::string>();
        c.bijection = j.at("bijection").get<std::vector<int>>();
        c.first_ratio_above_1e6 = j.at("first_ratio_above_1e6").get<int>();
        c.divergence = j.at("divergence").get<std::string>();
    } else {
        throw std::invalid_argument("unknown certificate scenario: " + c.scenario);
    }
    c.margins_monotone = j.at("margins_monotone").get<bool>();
    for (const auto& je : j.at("entries")) {
        verify::ObstructionEntry e;
        e.n = je.at("n").get<int>();
        e.margin = signed_log_from_json(je.at("margin"));
        e.witness_x = je.at("witness_x").get<double>();
        if (c.scenario == "nazarov") {
            e.log_disc_dist = je.at("log_disc_dist").get<double>();
            e.log_gamma_bound = je.at("log_gamma_bound").get<double>();
            e.strip_loglog = je.at("strip_loglog").get<double>();
        } else {
            e.log_ratio = je.at("log_ratio").get<double>();
        }
        c.entries.push_back(e);
    }
    return c;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qslab::io
