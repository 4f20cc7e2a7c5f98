#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qslab/geometry/domain.hpp"
#include "qslab/maps/bump.hpp"
#include "qslab/maps/line_map.hpp"
#include "qslab/maps/plane_map.hpp"
#include "qslab/num/fd.hpp"
#include "qslab/num/signed_log.hpp"

namespace qslab::schwartz {

using num::MultiIndex;
using num::SignedLog;
using num::Vec;

/// Smooth scalar field with sign/log-magnitude evaluation, so witness
/// functions whose values sit far below double underflow stay computable.
template <int N>
class ScalarField {
public:
    virtual ~ScalarField() = default;
    virtual SignedLog value(Vec<N> x) const = 0;

    /// Closed-form derivative when the family has one.
    virtual bool exact_derivative(const MultiIndex<N>& /*k*/, Vec<N> /*x*/,
                                  SignedLog& /*out*/) const {
        return false;
    }
};

template <int N>
using FieldPtr = std::shared_ptr<const ScalarField<N>>;

/// A Schwartz candidate: evaluator + domain + the set where all Taylor
/// coefficients vanish by construction.
template <int N>
struct TestFunction {
    std::string name;
    FieldPtr<N> field;
    geom::DomainSpec domain;
    geom::OraclePtr oracle;  // exact oracle of `domain`
    std::string flat_set;
    bool log_mode = false;

    SignedLog value(Vec<N> x) const { return field->value(x); }
};

using TestFunction1 = TestFunction<1>;
using TestFunction2 = TestFunction<2>;

/// Derivative of a test function: closed form when available, otherwise
/// nested central differences evaluated in log space with the
/// boundary-aware step min(h0, d/(4|k|)).
template <int N>
struct FieldDerivative {
    SignedLog value;
    double step = 0.0;
    bool exact = false;
    bool step_warning = false;
};

template <int N>
FieldDerivative<N> derivative(const TestFunction<N>& f, const MultiIndex<N>& k, Vec<N> x);

/// Log-space nested stencil on a raw field (test-visible for oracles).
template <int N>
SignedLog log_space_fd(const ScalarField<N>& f, Vec<N> x, const MultiIndex<N>& k, double step);

// ---------------------------------------------------------------------------
// Builders (line)
// ---------------------------------------------------------------------------

/// Smooth compactly supported bump field from a profile; 1 on the plateau,
/// exactly 0 outside the support. Derivative bounds C_l cached for l <= 4.
TestFunction1 make_bump(const maps::BumpSpec& spec);

/// Gaussian exp(-x^2) on the (windowed) line; all derivatives exact.
TestFunction1 make_gaussian();

/// The rapid-decay fixture of the exp/log example: 0 for x <= 0 and
/// exactly exp(-x) for x >= 1, smooth in between, Schwartz on R.
TestFunction1 make_decaying_tail();

/// f(x) = sum_i a(n_i) * chi(x - m_i - 1/2) with chi the [-1/4, 1/4] bump,
/// chi(0) = 1: the witness on N = U (n, n+1) pinned to the pigeonhole
/// subsequence. Coefficients are carried in log space.
TestFunction1 make_interval_witness_f(const geom::LengthSpec& a,
                                      const std::vector<std::pair<int, int>>& pairs, int n_max);

/// Sum over the intervals of `domain_union` of bumps scaled into each
/// interval's middle half with log-space coefficients log_coeff(n); the
/// generic Schwartz suite member on countable interval unions.
TestFunction1 make_interval_suite_f(const geom::IntervalUnion& domain_union,
                                    const std::vector<double>& log_coeff, std::string name);

/// f(x - x0) with exact derivatives forwarded.
TestFunction1 make_shifted(const TestFunction1& f, double x0);

/// Smooth rise on [0.5, 1] times exp(-x^power) for x > 0, zero otherwise:
/// the super-decaying tail profile that beats every exp(j * x^(power-1)).
TestFunction1 make_super_decay(int power);

/// Pullback f o phi along a line map.
TestFunction1 pullback(const TestFunction1& f, maps::LineMapPtr map, geom::DomainSpec new_domain);

// ---------------------------------------------------------------------------
// Builders (plane)
// ---------------------------------------------------------------------------

/// Radial bump: 1 on |z| <= plateau_radius, 0 outside |z| >= support_radius.
TestFunction2 make_radial_bump(double plateau_radius, double support_radius);

/// f(z) = sum_n exp(-n) chi(n^2 (z - n)) on the chain-of-discs domain,
/// with chi the radial bump that is 1 on |w| <= 1/2 and 0 outside the unit
/// disc; equals exp(-n) on B(n, 1/(2n^2)).
TestFunction2 make_nazarov_f(int n_max);

/// g(z) = exp(1/(|z| - 1)) on the unit disc; radial, flat at the boundary.
TestFunction2 make_radial_g();

/// Product field f(x) * g(y) from two 1-D fields, with exact derivatives
/// whenever both factors have them.
TestFunction2 make_product(const TestFunction1& fx, const TestFunction1& fy,
                           geom::DomainSpec domain, std::string name);

/// Field B((v - lo(u)) / (hi(u) - lo(u))) style band profile for the cusp
/// domain: B(v * exp(p(u))) with B a bump on (0, 1), times a u-profile.
TestFunction2 make_cusp_band(const geom::CuspDomain& dom, const TestFunction1& u_profile,
                             const maps::BumpSpec& band, std::string name);

/// Pullback f o phi along a plane map.
TestFunction2 pullback(const TestFunction2& f, maps::PlaneMapPtr map, geom::DomainSpec new_domain);

/// Scalar multiple in log space (absolute homogeneity checks).
template <int N>
TestFunction<N> scale(const TestFunction<N>& f, double c);

}  // namespace qslab::schwartz
