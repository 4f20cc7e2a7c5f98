#include "qslab/maps/line_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qslab::maps {

namespace {

using geom::IntervalUnion;
using geom::LengthSpec;

class IntervalLinearMap final : public LineMap {
public:
    IntervalLinearMap(LengthSpec a, LengthSpec b, int n_max)
        : a_(a), b_(b), na_(geom::build_na(a, n_max)), nb_(geom::build_na(b, n_max)) {}

    std::string family() const override { return "interval_linear"; }
    const IntervalUnion* domain() const override { return &na_; }
    const IntervalUnion* image() const override { return &nb_; }

    double eval(double x) const override {
        const int n = base_index(na_, x);
        return (b_(n) / a_(n)) * (x - double(n)) + double(n);
    }

    double inverse(double y) const override {
        const int n = base_index(nb_, y);
        return (a_(n) / b_(n)) * (y - double(n)) + double(n);
    }

    double derivative(int order, double x) const override {
        if (order == 0) return eval(x);
        if (order > 1) return 0.0;
        const int n = base_index(na_, x);
        return b_(n) / a_(n);
    }

private:
    static int base_index(const IntervalUnion& u, double x) {
        const auto idx = u.find(x);
        if (!idx) throw std::domain_error("interval map: point outside the union");
        return int(std::floor(u.intervals[*idx].left)) ;
    }

    LengthSpec a_, b_;
    IntervalUnion na_, nb_;
};

class CantorMapImpl final : public CantorLineMap {
public:
    explicit CantorMapImpl(int depth)
        : gaps_(geom::build_cantor_gaps(depth)) {
        const std::size_t count = gaps_.size();
        source_.intervals.reserve(count);
        for (std::size_t n = 1; n <= count; ++n)
            source_.intervals.push_back({double(n), double(n) + 1.0});
        // image ordered by left endpoint for point lookup, remembering the
        // enumerated gap behind each ordered slot
        std::vector<std::size_t> perm(count);
        std::iota(perm.begin(), perm.end(), std::size_t(0));
        std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
            return gaps_.intervals[i].left < gaps_.intervals[j].left;
        });
        ordered_.intervals.reserve(count);
        order_to_enum_.resize(count);
        for (std::size_t slot = 0; slot < count; ++slot) {
            ordered_.intervals.push_back(gaps_.intervals[perm[slot]]);
            order_to_enum_[slot] = perm[slot];
        }
    }

    std::string family() const override { return "cantor"; }
    const IntervalUnion* domain() const override { return &source_; }
    const IntervalUnion* image() const override { return &gaps_; }

    double scale(std::size_t n) const override { return std::pow(3.0, -generation(n)); }
    int generation(std::size_t n) const override { return geom::cantor_generation(n); }

    double eval(double x) const override {
        const auto idx = source_.find(x);
        if (!idx) throw std::domain_error("cantor map: point outside the unit intervals");
        const std::size_t n = *idx + 1;  // enumeration is 1-based
        const geom::Interval gap = gaps_.intervals[n - 1];
        return gap.left + scale(n) * (x - double(n));
    }

    double inverse(double y) const override {
        const auto slot = ordered_.find(y);
        if (!slot) throw std::domain_error("cantor map: point outside the gaps");
        const std::size_t n = order_to_enum_[*slot] + 1;
        const geom::Interval gap = gaps_.intervals[n - 1];
        return double(n) + (y - gap.left) / scale(n);
    }

    double derivative(int order, double x) const override {
        if (order == 0) return eval(x);
        if (order > 1) return 0.0;
        const auto idx = source_.find(x);
        if (!idx) throw std::domain_error("cantor map: point outside the unit intervals");
        return scale(*idx + 1);
    }

private:
    IntervalUnion gaps_;      // paper enumeration order
    IntervalUnion ordered_;   // geometric order for lookup
    IntervalUnion source_;
    std::vector<std::size_t> order_to_enum_;
};

class ExpLogMap final : public LineMap {
public:
    explicit ExpLogMap(bool log_direction) : log_(log_direction) {}

    std::string family() const override { return log_ ? "log" : "exp"; }

    double eval(double x) const override {
        if (log_) {
            if (!(x > 0.0)) throw std::domain_error("log: needs x > 0");
            return std::log(x);
        }
        return std::exp(x);
    }

    double inverse(double y) const override {
        if (log_) return std::exp(y);
        if (!(y > 0.0)) throw std::domain_error("exp inverse: needs y > 0");
        return std::log(y);
    }

    double derivative(int order, double x) const override {
        if (order == 0) return eval(x);
        if (!log_) return std::exp(x);
        if (!(x > 0.0)) throw std::domain_error("log: needs x > 0");
        // d^n/dx^n log x = (-1)^(n-1) (n-1)! / x^n
        double fact = 1.0;
        for (int j = 2; j < order; ++j) fact *= j;
        const double sgn = (order % 2 == 1) ? 1.0 : -1.0;
        return sgn * fact / std::pow(x, order);
    }

private:
    bool log_;
};

class LineComposition final : public LineMap {
public:
    explicit LineComposition(std::vector<LineMapPtr> maps) : maps_(std::move(maps)) {
        if (maps_.empty()) throw std::invalid_argument("compose_line: empty chain");
    }
    std::string family() const override { return "composition"; }
    double eval(double x) const override {
        for (const auto& m : maps_) x = m->eval(x);
        return x;
    }
    double inverse(double y) const override {
        for (auto it = maps_.rbegin(); it != maps_.rend(); ++it) y = (*it)->inverse(y);
        return y;
    }
    double derivative(int order, double x) const override {
        if (order == 0) return eval(x);
        if (order == 1) {
            double acc = 1.0;
            for (const auto& m : maps_) {
                acc *= m->derivative(1, x);
                x = m->eval(x);
            }
            return acc;
        }
        throw std::invalid_argument("compose_line: closed-form derivatives stop at order 1");
    }

private:
    std::vector<LineMapPtr> maps_;
};

}  // namespace

LineMapPtr make_interval_linear_map(const LengthSpec& a, const LengthSpec& b, int n_max) {
    return std::make_shared<IntervalLinearMap>(a, b, n_max);
}

std::shared_ptr<const CantorLineMap> make_cantor_map(int depth) {
    return std::make_shared<CantorMapImpl>(depth);
}

LineMapPtr make_exp_log_map(bool log_direction) {
    return std::make_shared<ExpLogMap>(log_direction);
}

LineMapPtr compose_line(std::vector<LineMapPtr> maps) {
    return std::make_shared<LineComposition>(std::move(maps));
}

namespace {

class LineInverseView final : public LineMap {
public:
    explicit LineInverseView(LineMapPtr inner) : inner_(std::move(inner)) {}
    std::string family() const override { return inner_->family() + "^-1"; }
    double eval(double x) const override { return inner_->inverse(x); }
    double inverse(double y) const override { return inner_->eval(y); }
    double derivative(int order, double x) const override {
        if (order == 0) return eval(x);
        if (order == 1) return 1.0 / inner_->derivative(1, eval(x));
        throw std::invalid_argument("inverse view: closed-form derivatives stop at order 1");
    }
    const geom::IntervalUnion* domain() const override { return inner_->image(); }
    const geom::IntervalUnion* image() const override { return inner_->domain(); }

private:
    LineMapPtr inner_;
};

}  // namespace

LineMapPtr inverse_line_map(LineMapPtr m) {
    return std::make_shared<LineInverseView>(std::move(m));
}

}  // namespace qslab::maps
