#include <map>

#include "qslab/verify/verify.hpp"

namespace qslab::verify {

namespace {

using schwartz::FieldPtr;
using schwartz::MultiIndex;
using schwartz::ScalarField;
using schwartz::TestFunction;
using schwartz::Vec;

/// Memoizes field values so the nested stencils of every derivative order
/// at one node share evaluations.
template <int N>
class MemoField final : public ScalarField<N> {
public:
    explicit MemoField(FieldPtr<N> inner) : inner_(std::move(inner)) {}

    SignedLog value(Vec<N> x) const override {
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        const SignedLog v = inner_->value(x);
        cache_.emplace(x, v);
        return v;
    }

    bool exact_derivative(const MultiIndex<N>& k, Vec<N> x, SignedLog& out) const override {
        return inner_->exact_derivative(k, x, out);
    }

    void reset() const { cache_.clear(); }

private:
    FieldPtr<N> inner_;
    mutable std::map<Vec<N>, SignedLog> cache_;
};

template <int N>
std::vector<MultiIndex<N>> multi_indices_up_to(int total) {
    std::vector<MultiIndex<N>> out;
    if constexpr (N == 1) {
        for (int k = 0; k <= total; ++k) out.push_back({k});
    } else {
        for (int s = 0; s <= total; ++s)
            for (int k1 = s; k1 >= 0; --k1) out.push_back({k1, s - k1});
    }
    return out;
}

template <int N>
std::vector<int> to_vec(const MultiIndex<N>& k) {
    return std::vector<int>(k.begin(), k.end());
}

template <int N>
geom::Point2 as_point(const Vec<N>& x) {
    if constexpr (N == 2) return {x[0], x[1]};
    else return {x[0], 0.0};
}

/// One direction of a transfer run: pull each suite function back onto
/// `onto` and record every (k, l) seminorm trend and decay trend.
template <int N>
void run_direction(const std::vector<TestFunction<N>>& pullbacks, const geom::DomainSpec& onto,
                   const TransferPlan& plan, const std::string& direction,
                   std::vector<TrendRecord>& records) {
    const auto grids = schwartz::make_grids<N>(onto, plan.grid);
    const auto oracle = geom::make_exact_oracle(onto);
    const auto ks = multi_indices_up_to<N>(plan.max_k);
    const auto ls = multi_indices_up_to<N>(plan.max_l);

    for (const auto& f : pullbacks) {
        auto memo = std::make_shared<MemoField<N>>(f.field);
        TestFunction<N> fm = f;
        fm.field = memo;

        std::map<std::pair<std::size_t, std::size_t>, std::vector<SignedLog>> semi_trends;
        std::map<int, std::vector<SignedLog>> decay_trends;
        std::map<std::pair<std::size_t, std::size_t>, SignedLog> semi_sup;
        std::map<int, SignedLog> decay_sup;

        for (const auto& grid : grids) {
            for (const auto& x : grid.nodes) {
                const SignedLog d = oracle->signed_log_dist(as_point<N>(x));
                if (!(d.sign > 0)) continue;
                memo->reset();
                // all derivative orders at this node (memo shares values)
                std::vector<SignedLog> dk(ks.size());
                for (std::size_t i = 0; i < ks.size(); ++i)
                    dk[i] = schwartz::derivative<N>(fm, ks[i], x).value.abs();
                for (std::size_t i = 0; i < ks.size(); ++i) {
                    for (std::size_t j = 0; j < ls.size(); ++j) {
                        SignedLog w = SignedLog::from_log(0.0);
                        for (int a = 0; a < N; ++a)
                            w = w * SignedLog::of(x[a]).pow_int(ls[j][a]);
                        const SignedLog cand = dk[i] * w.abs();
                        auto& sup = semi_sup[{i, j}];
                        if (cand > sup) sup = cand;
                    }
                }
                const SignedLog fv = dk[0];
                for (int m = 0; m <= plan.max_m; ++m) {
                    const SignedLog cand = fv / d.pow_int(m);
                    auto& sup = decay_sup[m];
                    if (cand > sup) sup = cand;
                }
            }
            for (std::size_t i = 0; i < ks.size(); ++i)
                for (std::size_t j = 0; j < ls.size(); ++j)
                    semi_trends[{i, j}].push_back(semi_sup[{i, j}]);
            for (int m = 0; m <= plan.max_m; ++m)
                decay_trends[m].push_back(decay_sup[m]);
        }

        for (std::size_t i = 0; i < ks.size(); ++i) {
            for (std::size_t j = 0; j < ls.size(); ++j) {
                TrendRecord r;
                r.function = f.name;
                r.direction = direction;
                r.kind = "seminorm";
                r.k = to_vec<N>(ks[i]);
                r.l = to_vec<N>(ls[j]);
                r.values = semi_trends[{i, j}];
                r.trend = schwartz::classify_trend(r.values);
                records.push_back(std::move(r));
            }
        }
        for (int m = 0; m <= plan.max_m; ++m) {
            TrendRecord r;
            r.function = f.name;
            r.direction = direction;
            r.kind = "decay";
            r.m = m;
            r.values = decay_trends[m];
            r.trend = schwartz::classify_trend(r.values);
            records.push_back(std::move(r));
        }
    }
}

Verdict aggregate(const std::vector<TrendRecord>& records) {
    bool any_geometric = false;
    bool all_stable = true;
    for (const auto& r : records) {
        if (r.trend == Trend::Geometric) any_geometric = true;
        if (r.trend != Trend::Stable) all_stable = false;
    }
    if (any_geometric) return Verdict::Refuted;
    if (all_stable) return Verdict::Supported;
    return Verdict::Inconclusive;
}

}  // namespace

TransferEvidence positive_transfer(maps::PlaneMapPtr map, const geom::DomainSpec& u_domain,
                                   const geom::DomainSpec& v_domain,
                                   const std::vector<schwartz::TestFunction2>& suite_v,
                                   const std::vector<schwartz::TestFunction2>& suite_u,
                                   const TransferPlan& plan, const std::string& map_id) {
    TransferEvidence ev;
    ev.map_id = map_id;
    ev.seed = plan.grid.seed;
    std::vector<schwartz::TestFunction2> fwd, inv;
    for (const auto& f : suite_v) fwd.push_back(schwartz::pullback(f, map, u_domain));
    const auto minv = maps::inverse_map(map);
    for (const auto& f : suite_u) inv.push_back(schwartz::pullback(f, minv, v_domain));
    run_direction<2>(fwd, u_domain, plan, "forward", ev.records);
    run_direction<2>(inv, v_domain, plan, "inverse", ev.records);
    ev.verdict = aggregate(ev.records);
    return ev;
}

TransferEvidence positive_transfer_line(maps::LineMapPtr map, const geom::DomainSpec& u_domain,
                                        const geom::DomainSpec& v_domain,
                                        const std::vector<schwartz::TestFunction1>& suite_v,
                                        const std::vector<schwartz::TestFunction1>& suite_u,
                                        const TransferPlan& plan, const std::string& map_id) {
    TransferEvidence ev;
    ev.map_id = map_id;
    ev.seed = plan.grid.seed;
    std::vector<schwartz::TestFunction1> fwd, inv;
    for (const auto& f : suite_v) fwd.push_back(schwartz::pullback(f, map, u_domain));
    const auto minv = maps::inverse_line_map(map);
    for (const auto& f : suite_u) inv.push_back(schwartz::pullback(f, minv, v_domain));
    run_direction<1>(fwd, u_domain, plan, "forward", ev.records);
    run_direction<1>(inv, v_domain, plan, "inverse", ev.records);
    ev.verdict = aggregate(ev.records);
    return ev;
}

}  // namespace qslab::verify
