#include "run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "qslab/io/json_io.hpp"
#include "qslab/verify/fixtures.hpp"

namespace qslab::cli {

namespace {

using io::json;

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Output {
    std::string path;      // empty -> stdout
    std::string format = "json";

    void write(const json& report, std::ostream& fallback, const std::string& csv = "") const {
        const std::string body = (format == "csv" && !csv.empty()) ? csv : io::dump_report(report);
        if (path.empty()) {
            fallback << body;
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << body;
        }
    }
};

json load_json(const std::string& path_or_inline) {
    if (!path_or_inline.empty() && (path_or_inline[0] == '{' || path_or_inline[0] == '['))
        return json::parse(path_or_inline);
    std::ifstream f(path_or_inline);
    if (!f) throw std::runtime_error("cannot open input file: " + path_or_inline);
    json j;
    f >> j;
    return j;
}

int verdict_exit(verify::Verdict v) {
    switch (v) {
        case verify::Verdict::Supported: return kExitPass;
        case verify::Verdict::Refuted: return kExitRefuted;
        case verify::Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

std::string dimension_csv(const geom::DimensionReport& rep) {
    std::ostringstream os;
    os << "scale,count\n";
    os.precision(17);
    for (std::size_t i = 0; i < rep.scales.size(); ++i)
        os << rep.scales[i] << "," << rep.counts[i] << "\n";
    return os.str();
}

std::string certificate_csv(const verify::ObstructionCertificate& cert) {
    std::ostringstream os;
    os.precision(17);
    if (cert.scenario == "nazarov") {
        os << "n,margin_sign,margin_ln\n";
        for (const auto& e : cert.entries)
            os << e.n << "," << e.margin.sign << "," << e.margin.ln << "\n";
    } else {
        os << "n,log_ratio\n";
        for (const auto& e : cert.entries) os << e.n << "," << e.log_ratio << "\n";
    }
    return os.str();
}

std::string evidence_csv(const verify::TransferEvidence& ev) {
    std::ostringstream os;
    os.precision(17);
    os << "function,direction,kind,index,level,sign,ln\n";
    for (const auto& r : ev.records) {
        std::ostringstream idx;
        if (r.kind == "seminorm") {
            idx << "k=";
            for (int v : r.k) idx << v << "_";
            idx << "l=";
            for (int v : r.l) idx << v << "_";
        } else {
            idx << "m=" << r.m;
        }
        for (std::size_t lev = 0; lev < r.values.size(); ++lev)
            os << r.function << "," << r.direction << "," << r.kind << "," << idx.str() << ","
               << lev << "," << r.values[lev].sign << "," << r.values[lev].ln << "\n";
    }
    return os.str();
}

std::vector<geom::Point2> dimension_points(const std::string& fixture, int iterations, int depth,
                                           double spacing, double* resolution) {
    if (fixture == "koch") {
        const auto curve = geom::build_koch_snowflake(iterations);
        *resolution = spacing;
        return geom::sample_curve_points(curve, spacing);
    }
    if (fixture == "cantor") {
        std::vector<geom::Point2> pts;
        for (double x : geom::cantor_set_points(depth)) pts.emplace_back(x, 0.0);
        *resolution = std::pow(3.0, -depth);
        return pts;
    }
    if (fixture == "segment") {
        std::vector<geom::Point2> pts;
        const int n = std::max(2, int(std::ceil(1.0 / spacing)));
        for (int i = 0; i <= n; ++i) pts.emplace_back(double(i) / n, 0.0);
        *resolution = spacing;
        return pts;
    }
    throw std::runtime_error("unknown dimension fixture: " + fixture);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qslab: planar-domain distance oracles, diffeomorphism fixtures, "
                 "rapid-decay seminorm sweeps and obstruction certificates"};
    app.require_subcommand(1);

    Output output;
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed recorded in reports");
    app.add_option("--out", output.path, "output file (default: stdout)");
    app.add_option("--format", output.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // fixtures ---------------------------------------------------------
    auto* fixtures = app.add_subcommand("fixtures", "build geometry fixtures");
    std::string fixture_name;
    int depth = 2, iterations = 3, n_max = 5;
    std::string a_spec = "constant";
    fixtures->add_option("name", fixture_name, "cantor | koch | nazarov | na")->required();
    fixtures->add_option("--depth", depth, "cantor generation depth");
    fixtures->add_option("--iterations", iterations, "koch iterations");
    fixtures->add_option("--n-max", n_max, "index truncation");
    fixtures->add_option("--a", a_spec, "length rule for na: constant|inverse_square|exp_decay");

    // quasicircle ------------------------------------------------------
    auto* quasicircle = app.add_subcommand("quasicircle", "arc-condition constant of a curve");
    std::string curve_path;
    quasicircle->add_option("--curve", curve_path, "curve JSON file")->required();

    // dimension --------------------------------------------------------
    auto* dimension = app.add_subcommand("dimension", "box-counting dimension");
    std::string dim_fixture = "koch";
    std::string dim_curve_path;
    double scale_max = 0.5;
    int n_scales = 9;
    double spacing = 1e-3;
    dimension->add_option("--fixture", dim_fixture, "koch | cantor | segment");
    dimension->add_option("--curve", dim_curve_path, "curve JSON file (overrides fixture)");
    dimension->add_option("--iterations", iterations, "koch iterations");
    dimension->add_option("--depth", depth, "cantor depth");
    dimension->add_option("--scale-max", scale_max, "largest box size");
    dimension->add_option("--n-scales", n_scales, "number of half-ratio scales");
    dimension->add_option("--spacing", spacing, "curve sampling spacing");

    // map --------------------------------------------------------------
    auto* map_cmd = app.add_subcommand("map", "evaluate a map spec");
    std::string map_spec_arg;
    std::vector<double> at{0.0, 0.0};
    std::vector<int> deriv_idx;
    bool apply_inverse = false;
    map_cmd->add_option("--spec", map_spec_arg, "map spec JSON (inline or file)")->required();
    map_cmd->add_option("--at", at, "evaluation point (x y, or x for line maps)")
        ->expected(1, 2);
    map_cmd->add_option("--derivative", deriv_idx, "derivative multi-index")->expected(1, 2);
    map_cmd->add_flag("--inverse", apply_inverse, "evaluate the inverse map");

    // pullback-check ---------------------------------------------------
    auto* pbc = app.add_subcommand("pullback-check",
                                   "seminorm and decay trends of a pullback");
    std::string pbc_map, pbc_function, pbc_domain;
    std::vector<int> pbc_k{0}, pbc_l{0};
    int pbc_m = 1;
    pbc->add_option("--map", pbc_map, "map spec JSON (inline or file)")->required();
    pbc->add_option("--function", pbc_function, "function spec JSON")->required();
    pbc->add_option("--domain", pbc_domain, "target domain spec JSON")->required();
    pbc->add_option("-k", pbc_k, "derivative multi-index")->expected(1, 2);
    pbc->add_option("-l", pbc_l, "monomial multi-index")->expected(1, 2);
    pbc->add_option("-m", pbc_m, "decay order");

    // transfer -----------------------------------------------------------
    auto* transfer = app.add_subcommand("transfer", "two-sided transfer evidence");
    std::string transfer_fixture;
    int orders = 3, m_max = 3;
    std::vector<double> poly{0.0, 1.0};
    transfer->add_option("fixture", transfer_fixture, "cusp | cantor | interval | explog")
        ->required();
    transfer->add_option("--orders", orders, "max derivative/monomial order");
    transfer->add_option("--m-max", m_max, "max decay order");
    transfer->add_option("--p", poly, "cusp polynomial coefficients, lowest first");
    transfer->add_option("--depth", depth, "cantor depth");
    transfer->add_option("--n-max", n_max, "interval prefix length");

    // counterexample ---------------------------------------------------
    auto* cex = app.add_subcommand("counterexample", "obstruction certificates");
    std::string scenario;
    double C = 1000.0;
    int n_lo = 2, n_hi = 10;
    std::string bijection_kind = "identity";
    cex->add_option("scenario", scenario, "nazarov | intervals")->required();
    cex->add_option("--C", C, "assumed seminorm bound");
    cex->add_option("--n-lo", n_lo, "first index");
    cex->add_option("--n-max", n_hi, "last index");
    cex->add_option("--a", a_spec, "interval length rule");
    cex->add_option("--bijection", bijection_kind, "identity | swap");

    // replay -------------------------------------------------------------
    auto* replay_cmd = app.add_subcommand("replay", "recompute a certificate from its JSON");
    std::string cert_path;
    replay_cmd->add_option("--cert", cert_path, "certificate JSON file")->required();

    std::vector<const char*> argv;
    argv.push_back("qslab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*fixtures) {
            if (fixture_name == "cantor") {
                output.write(io::to_json(geom::build_cantor_gaps(depth)), out);
            } else if (fixture_name == "koch") {
                output.write(io::to_json(geom::build_koch_snowflake(iterations)), out);
            } else if (fixture_name == "nazarov") {
                output.write(io::to_json(geom::build_nazarov_domain(n_max)), out);
            } else if (fixture_name == "na") {
                output.write(
                    io::to_json(geom::build_na(geom::LengthSpec::parse(a_spec), n_max)), out);
            } else {
                err << "unknown fixture: " << fixture_name << "\n";
                return kExitUsage;
            }
            return kExitPass;
        }

        if (*quasicircle) {
            const auto curve = io::curve_from_json(load_json(curve_path));
            const auto result = geom::ahlfors_constant(curve);
            json rep = io::to_json(result);
            rep["vertices"] = curve.vertices.size();
            output.write(rep, out);
            return kExitPass;
        }

        if (*dimension) {
            std::vector<geom::Point2> pts;
            double resolution = spacing;
            if (!dim_curve_path.empty()) {
                const auto curve = io::curve_from_json(load_json(dim_curve_path));
                pts = geom::sample_curve_points(curve, spacing);
            } else {
                pts = dimension_points(dim_fixture, iterations, depth, spacing, &resolution);
            }
            const auto rep = geom::box_counting_dimension(pts, scale_max, n_scales, resolution);
            json jrep = io::to_json(rep);
            jrep["points"] = pts.size();
            jrep["seed"] = seed;
            output.write(jrep, out, dimension_csv(rep));
            return kExitPass;
        }

        if (*map_cmd) {
            const json spec = load_json(map_spec_arg);
            json rep{{"spec", spec}, {"seed", seed}};
            if (at.size() == 1) {
                const auto m = io::line_map_from_json(spec);
                const double x = at[0];
                if (!deriv_idx.empty()) {
                    rep["derivative"] = m->derivative(deriv_idx[0], x);
                    rep["order"] = deriv_idx[0];
                    rep["mode"] = "exact";
                } else {
                    rep["value"] = apply_inverse ? m->inverse(x) : m->eval(x);
                }
            } else {
                const auto m = io::plane_map_from_json(spec);
                const geom::Complex z{at[0], at[1]};
                if (!deriv_idx.empty()) {
                    maps::MultiIndex2 k{deriv_idx[0],
                                        deriv_idx.size() > 1 ? deriv_idx[1] : 0};
                    const auto d = maps::map_derivative(*m, k, geom::Point2(z));
                    rep["derivative"] = json::array({d.value[0], d.value[1]});
                    rep["mode"] = d.exact ? "exact" : "fd";
                    rep["step"] = d.step;
                } else {
                    const geom::Complex w = apply_inverse ? m->inverse(z) : m->eval(z);
                    rep["value"] = json::array({w.real(), w.imag()});
                }
            }
            output.write(rep, out);
            return kExitPass;
        }

        if (*pbc) {
            const json fspec = load_json(pbc_function);
            const json mspec = load_json(pbc_map);
            const auto dom = io::domain_from_json(load_json(pbc_domain));
            schwartz::SamplePlan plan;
            plan.seed = seed;
            json rep{{"map", mspec}, {"function", fspec}, {"seed", seed}};
            const std::string builtin = fspec.at("builtin").get<std::string>();
            bool stable = true;
            if (geom::ambient_dim(dom) == 1) {
                schwartz::TestFunction1 f;
                if (builtin == "gaussian") f = schwartz::make_gaussian();
                else if (builtin == "decaying_tail") f = schwartz::make_decaying_tail();
                else if (builtin == "bump")
                    f = schwartz::make_bump(maps::BumpSpec{
                        fspec.at("support").at(0).get<double>(),
                        fspec.at("plateau").at(0).get<double>(),
                        fspec.at("plateau").at(1).get<double>(),
                        fspec.at("support").at(1).get<double>()});
                else throw std::runtime_error("unknown 1-D builtin: " + builtin);
                const auto pb = schwartz::pullback(f, io::line_map_from_json(mspec), dom);
                const auto srep = schwartz::seminorm<1>(pb, {pbc_k[0]}, {pbc_l[0]}, plan);
                const auto drep = schwartz::decay_ratio<1>(pb, pbc_m, plan);
                rep["seminorm"] = io::to_json(srep);
                rep["decay"] = io::to_json(drep);
                stable = schwartz::classify_trend(srep.trend) == schwartz::Trend::Stable &&
                         schwartz::classify_trend(drep.trend) == schwartz::Trend::Stable;
            } else {
                schwartz::TestFunction2 f;
                if (builtin == "radial_g") f = schwartz::make_radial_g();
                else if (builtin == "nazarov_f")
                    f = schwartz::make_nazarov_f(fspec.at("n_max").get<int>());
                else if (builtin == "radial_bump")
                    f = schwartz::make_radial_bump(fspec.at("plateau").get<double>(),
                                                   fspec.at("support").get<double>());
                else throw std::runtime_error("unknown 2-D builtin: " + builtin);
                const auto pb = schwartz::pullback(f, io::plane_map_from_json(mspec), dom);
                maps::MultiIndex2 k{pbc_k[0], pbc_k.size() > 1 ? pbc_k[1] : 0};
                maps::MultiIndex2 l{pbc_l[0], pbc_l.size() > 1 ? pbc_l[1] : 0};
                const auto srep = schwartz::seminorm<2>(pb, k, l, plan);
                const auto drep = schwartz::decay_ratio<2>(pb, pbc_m, plan);
                rep["seminorm"] = io::to_json(srep);
                rep["decay"] = io::to_json(drep);
                stable = schwartz::classify_trend(srep.trend) == schwartz::Trend::Stable &&
                         schwartz::classify_trend(drep.trend) == schwartz::Trend::Stable;
            }
            rep["stable"] = stable;
            output.write(rep, out);
            return stable ? kExitPass : kExitInconclusive;
        }

        if (*transfer) {
            auto plan = verify::default_transfer_plan(orders, orders, m_max, seed);
            verify::TransferEvidence ev;
            if (transfer_fixture == "cusp") ev = verify::run_cusp_transfer(poly, plan);
            else if (transfer_fixture == "cantor") ev = verify::run_cantor_transfer(depth, plan);
            else if (transfer_fixture == "interval")
                ev = verify::run_interval_transfer(n_max, plan);
            else if (transfer_fixture == "explog") ev = verify::run_explog_transfer(plan);
            else {
                err << "unknown transfer fixture: " << transfer_fixture << "\n";
                return kExitUsage;
            }
            output.write(io::to_json(ev), out, evidence_csv(ev));
            return verdict_exit(ev.verdict);
        }

        if (*cex) {
            verify::ObstructionCertificate cert;
            if (scenario == "nazarov") {
                cert = verify::nazarov_obstruction(C, n_lo, n_hi);
            } else if (scenario == "intervals") {
                std::vector<int> bijection(n_hi);
                for (int n = 1; n <= n_hi; ++n) bijection[n - 1] = n;
                if (bijection_kind == "swap") {
                    for (int n = 1; n + 1 <= n_hi; n += 2) std::swap(bijection[n - 1], bijection[n]);
                } else if (bijection_kind != "identity") {
                    err << "unknown bijection: " << bijection_kind << "\n";
                    return kExitUsage;
                }
                const auto rule = geom::LengthSpec::parse(a_spec);
                const auto witness = maps::make_interval_linear_map(
                    rule, geom::LengthSpec::constant(), n_hi);
                cert = verify::interval_obstruction(rule, bijection, witness.get());
            } else {
                err << "unknown scenario: " << scenario << "\n";
                return kExitUsage;
            }
            output.write(io::to_json(cert), out, certificate_csv(cert));
            return kExitPass;
        }

        if (*replay_cmd) {
            const json original = load_json(cert_path);
            const auto cert = io::certificate_from_json(original);
            const auto fresh = verify::replay(cert);
            const json recomputed = io::to_json(fresh);
            const bool identical = io::dump_report(original) == io::dump_report(recomputed);
            json rep{{"replayed", identical}};
            if (!identical) rep["recomputed"] = recomputed;
            output.write(rep, out);
            return identical ? kExitPass : kExitRefuted;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage + 1;
    }

    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace qslab::cli
