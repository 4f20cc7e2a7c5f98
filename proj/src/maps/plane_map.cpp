#include "qslab/maps/plane_map.hpp"

#include <cmath>
#include <numbers>

namespace qslab::maps {

namespace {

constexpr double kPi = std::numbers::pi;

Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

bool PlaneMap::exact_partial(const MultiIndex2& k, Point2 p, std::array<double, 2>& out) const {
    const int n = k[0] + k[1];
    if (n == 0) {
        const Complex w = eval(p.cx());
        out = {w.real(), w.imag()};
        return true;
    }
    if (!is_holomorphic() || n > max_exact_order()) return false;
    // For holomorphic maps d/dx = d/dz and d/dy = i d/dz, so the (k1, k2)
    // partial of both components is i^(k2) * phi^(n).
    const Complex d = i_pow(k[1]) * complex_derivative(n, p.cx());
    out = {d.real(), d.imag()};
    return true;
}

// ---------------------------------------------------------------------------
// Mobius
// ---------------------------------------------------------------------------

namespace {

class MobiusMap final : public PlaneMap {
public:
    MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
        if (std::abs(a * d - b * c) == 0.0)
            throw std::invalid_argument("mobius: ad - bc must be nonzero");
    }

    std::string family() const override { return "mobius"; }
    bool is_holomorphic() const override { return true; }
    int max_exact_order() const override { return 64; }

    Complex eval(Complex z) const override {
        const Complex den = c_ * z + d_;
        if (std::abs(den) == 0.0) throw PoleError("mobius: evaluation at the pole");
        return (a_ * z + b_) / den;
    }

    Complex inverse(Complex w) const override {
        const Complex den = -c_ * w + a_;
        if (std::abs(den) == 0.0) throw PoleError("mobius: inverse evaluation at the pole");
        return (d_ * w - b_) / den;
    }

    Complex complex_derivative(int order, Complex z) const override {
        if (order == 0) return eval(z);
        if (std::abs(c_) == 0.0) {
            if (order == 1) return a_ / d_;
            return {0.0, 0.0};
        }
        const Complex den = c_ * z + d_;
        if (std::abs(den) == 0.0) throw PoleError("mobius: derivative at the pole");
        // phi = a/c + (b - ad/c)/(cz + d)
        double fact = 1.0;
        for (int j = 2; j <= order; ++j) fact *= j;
        const double sgn = (order % 2 == 0) ? 1.0 : -1.0;
        return (b_ * c_ - a_ * d_) * sgn * fact * std::pow(c_, order - 1) /
               std::pow(den, order + 1);
    }

private:
    Complex a_, b_, c_, d_;
};

class SquareMap final : public PlaneMap {
public:
    std::string family() const override { return "square"; }
    bool is_holomorphic() const override { return true; }
    int max_exact_order() const override { return 64; }
    bool has_exact_inverse() const override { return false; }
    Complex eval(Complex z) const override { return z * z; }
    Complex inverse(Complex) const override {
        throw std::domain_error("square: no global inverse, compose with a sqrt branch");
    }
    Complex complex_derivative(int order, Complex z) const override {
        switch (order) {
            case 0: return z * z;
            case 1: return 2.0 * z;
            case 2: return {2.0, 0.0};
            default: return {0.0, 0.0};
        }
    }
};

class SqrtBranchMap final : public PlaneMap {
public:
    SqrtBranchMap(double cut_angle, Complex base_point, Complex base_value)
        : cut_(cut_angle) {
        if (std::abs(base_value * base_value - base_point) >
            1e-9 * (1.0 + std::abs(base_point)))
            throw std::invalid_argument("sqrt branch: base value must square to base point");
        const Complex principal = branch_root(base_point);
        sign_ = (std::abs(principal - base_value) <= std::abs(principal + base_value)) ? 1.0
                                                                                       : -1.0;
        if (std::abs(sign_ * principal - base_value) > 1e-9 * (1.0 + std::abs(base_value)))
            throw std::invalid_argument("sqrt branch: base pair off the selected branch");
    }

    std::string family() const override { return "sqrt_branch"; }
    bool is_holomorphic() const override { return true; }
    int max_exact_order() const override { return 64; }

    Complex eval(Complex z) const override { return sign_ * branch_root(z); }

    Complex inverse(Complex w) const override { return w * w; }

    Complex complex_derivative(int order, Complex z) const override {
        // g = z^(1/2) on the branch: g^(n) = g * prod_j (1/2 - j) / z^n
        const Complex g = eval(z);
        Complex acc = g;
        for (int j = 0; j < order; ++j) acc *= (0.5 - double(j)) / z;
        return acc;
    }

private:
    /// Root with argument in (cut, cut + 2*pi)/2; on-cut points error out.
    Complex branch_root(Complex z) const {
        if (std::abs(z) == 0.0) throw BranchError("sqrt branch: origin lies on the cut");
        const Complex rotated = z * std::polar(1.0, -cut_);
        double phi = std::atan2(rotated.imag(), rotated.real());  // (-pi, pi]
        if (phi == 0.0 && rotated.real() > 0.0)
            throw BranchError("sqrt branch: evaluation on the cut");
        if (phi <= 0.0) phi += 2.0 * kPi;
        const double theta = cut_ + phi;  // in (cut, cut + 2 pi)
        return std::polar(std::sqrt(std::abs(z)), theta / 2.0);
    }

    double cut_;
    double sign_ = 1.0;
};

class PlanarExpMap final : public PlaneMap {
public:
    std::string family() const override { return "planar_exp"; }
    bool is_holomorphic() const override { return true; }
    int max_exact_order() const override { return 64; }
    Complex eval(Complex z) const override { return std::exp(z); }
    Complex inverse(Complex w) const override {
        if (std::abs(w) == 0.0) throw std::domain_error("planar_exp: log of zero");
        return std::log(w);  // principal branch window
    }
    Complex complex_derivative(int, Complex z) const override { return std::exp(z); }
};

class CompositionMap final : public PlaneMap {
public:
    explicit CompositionMap(std::vector<PlaneMapPtr> maps) : maps_(std::move(maps)) {
        if (maps_.empty()) throw std::invalid_argument("compose: empty chain");
    }

    std::string family() const override { return "composition"; }

    Complex eval(Complex z) const override {
        for (const auto& m : maps_) z = m->eval(z);
        return z;
    }

    Complex inverse(Complex w) const override {
        for (auto it = maps_.rbegin(); it != maps_.rend(); ++it) w = (*it)->inverse(w);
        return w;
    }

    bool has_exact_inverse() const override {
        for (const auto& m : maps_)
            if (!m->has_exact_inverse()) return false;
        return true;
    }

    const std::vector<PlaneMapPtr>& parts() const { return maps_; }

private:
    std::vector<PlaneMapPtr> maps_;
};

}  // namespace

PlaneMapPtr make_mobius(Complex a, Complex b, Complex c, Complex d) {
    return std::make_shared<MobiusMap>(a, b, c, d);
}

PlaneMapPtr make_square() { return std::make_shared<SquareMap>(); }

PlaneMapPtr make_sqrt_branch(double cut_angle, Complex base_point, Complex base_value) {
    return std::make_shared<SqrtBranchMap>(cut_angle, base_point, base_value);
}

PlaneMapPtr make_planar_exp() { return std::make_shared<PlanarExpMap>(); }

PlaneMapPtr compose(std::vector<PlaneMapPtr> maps) {
    return std::make_shared<CompositionMap>(std::move(maps));
}

namespace {

class InverseView final : public PlaneMap {
public:
    explicit InverseView(PlaneMapPtr inner) : inner_(std::move(inner)) {}
    std::string family() const override { return inner_->family() + "^-1"; }
    Complex eval(Complex z) const override { return inner_->inverse(z); }
    Complex inverse(Complex w) const override { return inner_->eval(w); }

private:
    PlaneMapPtr inner_;
};

}  // namespace

PlaneMapPtr inverse_map(PlaneMapPtr m) { return std::make_shared<InverseView>(std::move(m)); }

geom::ClosedCurve sqrt_preimage_curve(const geom::ClosedCurve& arc) {
    if (arc.closed) throw std::invalid_argument("sqrt preimage: expects a windowed open arc");
    if (arc.vertices.size() < 2)
        throw std::invalid_argument("sqrt preimage: arc needs at least 2 vertices");
    if (geom::abs(arc.vertices.front()) != 0.0)
        throw std::invalid_argument("sqrt preimage: arc must be anchored at the origin");
    // continue one branch along the curve; the nearer root of each vertex
    // keeps the branch continuous without any global cut
    std::vector<Complex> branch;
    branch.reserve(arc.vertices.size() - 1);
    for (std::size_t i = 1; i < arc.vertices.size(); ++i) {
        const Complex root = std::sqrt(arc.vertices[i].cx());
        if (branch.empty()) {
            branch.push_back(root);
        } else {
            branch.push_back(std::abs(root - branch.back()) <= std::abs(-root - branch.back())
                                 ? root
                                 : -root);
        }
    }
    geom::ClosedCurve out;
    out.closed = false;
    out.unbounded_window = arc.unbounded_window;
    out.vertices.reserve(2 * branch.size() + 1);
    for (auto it = branch.rbegin(); it != branch.rend(); ++it)
        out.vertices.push_back(geom::Point2(-*it));
    out.vertices.emplace_back(0.0, 0.0);
    for (const Complex& w : branch) out.vertices.push_back(geom::Point2(w));
    out.validate();
    return out;
}

MapDerivative map_derivative(const PlaneMap& map, const MultiIndex2& k, Point2 p,
                             double dist_to_boundary) {
    if (k[0] + k[1] > 6) throw std::invalid_argument("map_derivative: |k| must be <= 6");
    MapDerivative out;
    std::array<double, 2> exact{};
    if (map.exact_partial(k, p, exact)) {
        out.value = exact;
        out.exact = true;
        return out;
    }
    for (int comp = 0; comp < 2; ++comp) {
        auto f = [&](num::Vec<2> q) {
            const Complex w = map.eval(Complex{q[0], q[1]});
            return comp == 0 ? w.real() : w.imag();
        };
        const auto fd = num::fd_derivative<2>(f, {p.x, p.y}, k, dist_to_boundary);
        out.value[comp] = fd.value;
        out.step = fd.step;
        out.step_warning = out.step_warning || fd.step_warning;
    }
    return out;
}

}  // namespace qslab::maps
