#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qslab/io/json_io.hpp"
#include "qslab/verify/fixtures.hpp"

namespace py = pybind11;
using namespace qslab;

namespace {

io::json parse(const std::string& s) { return io::json::parse(s); }

std::vector<std::pair<double, double>> cantor_gaps(int depth) {
    std::vector<std::pair<double, double>> out;
    for (const auto& iv : geom::build_cantor_gaps(depth).intervals)
        out.emplace_back(iv.left, iv.right);
    return out;
}

std::vector<std::pair<double, double>> koch_snowflake(int iterations) {
    std::vector<std::pair<double, double>> out;
    for (const auto& v : geom::build_koch_snowflake(iterations).vertices)
        out.emplace_back(v.x, v.y);
    return out;
}

py::dict ahlfors(const std::vector<std::pair<double, double>>& pts, bool closed) {
    geom::ClosedCurve c;
    c.closed = closed;
    for (auto [x, y] : pts) c.vertices.emplace_back(x, y);
    if (!closed) c.unbounded_window = {0.0, 1.0};
    const auto r = geom::ahlfors_constant(c);
    py::dict d;
    d["constant"] = r.constant;
    d["witness"] = py::make_tuple(r.i, r.j);
    return d;
}

py::dict box_dimension(const std::vector<std::pair<double, double>>& pts, double scale_max,
                       int n_scales, double resolution) {
    std::vector<geom::Point2> points;
    points.reserve(pts.size());
    for (auto [x, y] : pts) points.emplace_back(x, y);
    const auto rep = geom::box_counting_dimension(points, scale_max, n_scales, resolution);
    py::dict d;
    d["slope"] = rep.slope;
    d["fit_quality"] = rep.fit_quality;
    d["scales"] = rep.scales;
    d["counts"] = rep.counts;
    return d;
}

py::tuple domain_distance(const std::string& domain_spec, double x, double y) {
    const auto dom = io::domain_from_json(parse(domain_spec));
    const auto oracle = geom::make_exact_oracle(dom);
    const auto d = oracle->signed_log_dist({x, y});
    return py::make_tuple(d.sign, d.ln, d.value());
}

std::complex<double> map_eval(const std::string& spec, std::complex<double> z) {
    return io::plane_map_from_json(parse(spec))->eval(z);
}

std::complex<double> map_inverse(const std::string& spec, std::complex<double> z) {
    return io::plane_map_from_json(parse(spec))->inverse(z);
}

py::dict map_derivative(const std::string& spec, int k1, int k2, double x, double y) {
    const auto m = io::plane_map_from_json(parse(spec));
    const auto d = maps::map_derivative(*m, {k1, k2}, {x, y});
    py::dict out;
    out["value"] = py::make_tuple(d.value[0], d.value[1]);
    out["exact"] = d.exact;
    out["step"] = d.step;
    return out;
}

double line_map_eval(const std::string& spec, double x) {
    return io::line_map_from_json(parse(spec))->eval(x);
}

double line_map_inverse(const std::string& spec, double y) {
    return io::line_map_from_json(parse(spec))->inverse(y);
}

py::list nazarov_margins(double C, int n_lo, int n_hi) {
    const auto cert = verify::nazarov_obstruction(C, n_lo, n_hi);
    py::list out;
    for (const auto& e : cert.entries)
        out.append(py::make_tuple(e.n, e.margin.sign, e.margin.ln));
    return out;
}

int nazarov_minimal_index(double C, int n_lo, int n_hi) {
    return verify::nazarov_obstruction(C, n_lo, n_hi).minimal_positive_n;
}

py::dict interval_certificate(const std::string& a, int n_max) {
    std::vector<int> bijection(n_max);
    for (int n = 1; n <= n_max; ++n) bijection[n - 1] = n;
    const auto cert = verify::interval_obstruction(geom::LengthSpec::parse(a), bijection);
    py::dict out;
    out["divergence"] = cert.divergence;
    out["first_ratio_above_1e6"] = cert.first_ratio_above_1e6;
    py::list ratios;
    for (const auto& e : cert.entries) ratios.append(py::make_tuple(e.n, e.log_ratio));
    out["log_ratios"] = ratios;
    return out;
}

std::string transfer_verdict(const std::string& fixture, int orders, int m_max) {
    const auto plan = verify::default_transfer_plan(orders, orders, m_max, 1);
    verify::TransferEvidence ev;
    if (fixture == "cusp") ev = verify::run_cusp_transfer({0.0, 1.0}, plan);
    else if (fixture == "cantor") ev = verify::run_cantor_transfer(6, plan);
    else if (fixture == "interval") ev = verify::run_interval_transfer(80, plan);
    else if (fixture == "explog") ev = verify::run_explog_transfer(plan);
    else throw std::invalid_argument("unknown fixture: " + fixture);
    return verify::verdict_name(ev.verdict);
}

}  // namespace

PYBIND11_MODULE(qslab_core, m) {
    m.doc() = "planar-domain distance oracles, diffeomorphism fixtures and "
              "rapid-decay certificates";
    m.def("cantor_gaps", &cantor_gaps, py::arg("depth"),
          "Cantor gap enumeration: decreasing length, then left endpoint");
    m.def("koch_snowflake", &koch_snowflake, py::arg("iterations"));
    m.def("ahlfors_constant", &ahlfors, py::arg("points"), py::arg("closed") = true);
    m.def("box_counting_dimension", &box_dimension, py::arg("points"), py::arg("scale_max"),
          py::arg("n_scales"), py::arg("resolution"));
    m.def("domain_distance", &domain_distance, py::arg("domain_spec"), py::arg("x"),
          py::arg("y"), "signed distance as (sign, ln, value)");
    m.def("map_eval", &map_eval);
    m.def("map_inverse", &map_inverse);
    m.def("map_derivative", &map_derivative);
    m.def("line_map_eval", &line_map_eval);
    m.def("line_map_inverse", &line_map_inverse);
    m.def("nazarov_margins", &nazarov_margins, py::arg("C"), py::arg("n_lo"), py::arg("n_hi"));
    m.def("nazarov_minimal_index", &nazarov_minimal_index);
    m.def("interval_certificate", &interval_certificate, py::arg("a"), py::arg("n_max"));
    m.def("transfer_verdict", &transfer_verdict, py::arg("fixture"), py::arg("orders") = 2,
          py::arg("m_max") = 2);
}
