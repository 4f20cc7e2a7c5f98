#include <algorithm>
#include <cmath>
#include <set>

#include "qslab/verify/verify.hpp"

namespace qslab::verify {

ObstructionCertificate nazarov_obstruction(double C, int n_lo, int n_hi) {
    if (!(C > 0.0)) throw std::invalid_argument("nazarov certificate: C must be > 0");
    if (n_lo < 2 || n_hi > 40 || n_lo > n_hi)
        throw std::invalid_argument("nazarov certificate: range must lie in [2, 40]");
    ObstructionCertificate cert;
    cert.scenario = "nazarov";
    cert.C = C;
    cert.n_lo = n_lo;
    cert.n_hi = n_hi;
    const double log_c = std::log(C);
    for (int n = n_lo; n <= n_hi; ++n) {
        ObstructionEntry e;
        e.n = n;
        const double strip_exponent = double(n) * double(n);  // log(-log strip height)
        const double gamma_exponent = log_c + double(n) + 1.0; // log(C e^{n+1})
        // margin = e^{n^2} - C e^{n+1}, held as sign + log of magnitude
        e.margin = SignedLog::from_log(strip_exponent) - SignedLog::from_log(gamma_exponent);
        e.witness_x = double(n) + 0.5;
        e.log_disc_dist = -double(n) - log_c;            // log of C^-1 e^-n
        e.log_gamma_bound = -std::exp(gamma_exponent);   // log of e^{-C e^{n+1}}
        e.strip_loglog = strip_exponent;
        cert.entries.push_back(e);
        if (cert.minimal_positive_n < 0 && e.margin.sign > 0) cert.minimal_positive_n = n;
    }
    // e^{n^2} - C e^{n+1} dips before the square term takes over, so the
    // certified monotone range starts at the minimal positive index.
    cert.margins_monotone = cert.minimal_positive_n > 0;
    for (std::size_t i = 0; i + 1 < cert.entries.size(); ++i) {
        if (cert.entries[i].n < cert.minimal_positive_n) continue;
        if (!(cert.entries[i].margin < cert.entries[i + 1].margin))
            cert.margins_monotone = false;
    }
    return cert;
}

ObstructionCertificate interval_obstruction(const geom::LengthSpec& a,
                                            const std::vector<int>& bijection,
                                            const maps::LineMap* witness_map) {
    const int n_max = int(bijection.size());
    if (n_max < 1) throw std::invalid_argument("interval certificate: empty bijection");
    std::set<int> seen;
    for (int v : bijection) {
        if (v < 1) throw std::invalid_argument("interval certificate: indices are 1-based");
        if (!seen.insert(v).second)
            throw std::invalid_argument("interval certificate: bijection must be injective");
    }
    ObstructionCertificate cert;
    cert.scenario = "intervals";
    cert.a_name = a.name();
    cert.bijection = bijection;
    cert.n_lo = 1;
    cert.n_hi = n_max;

    bool identity = true;
    for (int n = 1; n <= n_max; ++n) identity = identity && (bijection[n - 1] == n);

    const double log_1e6 = std::log(1e6);
    for (int n = 1; n <= n_max; ++n) {
        const int m = bijection[n - 1];
        if (m > n) continue;  // pigeonhole subsequence: m(n) <= n
        ObstructionEntry e;
        e.n = n;
        e.log_ratio = -a.log_value(n).ln;  // log(1/a(n))
        e.witness_x = double(m) + 0.5;
        e.margin = SignedLog::from_log(e.log_ratio);
        if (witness_map && identity) {
            // recompute the chain: y = phi^{-1}(m + 1/2) sits in
            // (n, n + a(n)), d(y, boundary) < a(n), ratio >= 1/a(n)
            const double y = witness_map->inverse(double(m) + 0.5);
            const auto* dom = witness_map->domain();
            if (dom) {
                const double d = dom->signed_dist(y);
                const double an = a(n);
                if (!(d > 0.0) || !(d < an))
                    throw std::logic_error("interval certificate: witness escaped its interval");
            }
        }
        cert.entries.push_back(e);
        if (cert.first_ratio_above_1e6 < 0 && e.log_ratio > log_1e6)
            cert.first_ratio_above_1e6 = n;
    }
    if (cert.entries.empty())
        throw std::invalid_argument(
            "interval certificate: truncated prefix avoids the pigeonhole subsequence");

    // growth of log(1/a(n)) against log n along the subsequence
    std::vector<double> qs;
    for (const auto& e : cert.entries)
        if (e.n >= 2) qs.push_back(e.log_ratio / std::log(double(e.n)));
    if (qs.size() < 2) {
        cert.divergence = "inconclusive";
    } else {
        bool nondecreasing = true;
        for (std::size_t i = qs.size() / 2; i + 1 < qs.size(); ++i)
            if (qs[i + 1] < qs[i] - 1e-9) nondecreasing = false;
        if (nondecreasing && qs.back() >= std::max(2.0 * qs.front(), qs.front() + 1.0))
            cert.divergence = "superpolynomial";
        else if (qs.back() <= 1.2 * qs.front() + 0.1)
            cert.divergence = "polynomial";
        else
            cert.divergence = "inconclusive";
    }
    cert.margins_monotone = std::is_sorted(
        cert.entries.begin(), cert.entries.end(),
        [](const ObstructionEntry& x, const ObstructionEntry& y) { return x.margin < y.margin; });
    return cert;
}

ObstructionCertificate replay(const ObstructionCertificate& cert) {
    if (cert.scenario == "nazarov") return nazarov_obstruction(cert.C, cert.n_lo, cert.n_hi);
    if (cert.scenario == "intervals")
        return interval_obstruction(geom::LengthSpec::parse(cert.a_name), cert.bijection);
    throw std::invalid_argument("replay: unknown scenario " + cert.scenario);
}

}  // namespace qslab::verify
