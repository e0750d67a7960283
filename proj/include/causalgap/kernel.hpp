#pragma once

// Shared numeric primitives: frequency bands, the |h(t)|^2 kernel of an ideal
// bandpass filter, the sine integral, adaptive Gauss-Kronrod quadrature and
// the tail sum of squared Fourier coefficients of a band indicator.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "causalgap/errors.hpp"

namespace causalgap {

enum class Mode { Analog, Digital };

/// Frequency band [a, b]. Analog bands are any a < b on the real line (rad/s);
/// digital bands satisfy 0 < a < b < 2*pi (rad/sample).
class BandpassInterval {
public:
    BandpassInterval(double a, double b, Mode mode = Mode::Analog);

    static BandpassInterval analog(double a, double b) { return {a, b, Mode::Analog}; }
    static BandpassInterval digital(double a, double b) { return {a, b, Mode::Digital}; }

    double lower() const { return a_; }
    double upper() const { return b_; }
    double bandwidth() const { return b_ - a_; }
    Mode mode() const { return mode_; }

    friend bool operator==(const BandpassInterval&, const BandpassInterval&) = default;

private:
    double a_;
    double b_;
    Mode mode_;
};

struct QuadratureConfig {
    double abs_tolerance = 1e-10;
    double rel_tolerance = 1e-10;
    std::size_t max_subdivisions = std::size_t{1} << 16;

    void validate() const;
};

struct SeriesConfig {
    double tail_bound_target = 1e-12;
    std::size_t max_terms = 10'000'000;

    void validate() const;
};

/// (1 - cos(c t)) / (pi t^2), with its limit c^2 / (2 pi) at t = 0.
///
/// Near the origin the cancellation in 1 - cos(ct) is avoided by a Taylor
/// branch for |ct| < 1e-4. Even in t bit-for-bit since only |t| is used.
template <typename Scalar>
Scalar oscillatory_kernel(Scalar c, Scalar t)
{
    using std::abs;
    using std::cos;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar at = abs(t);
    const Scalar x = c * at;
    if (x < Scalar(1e-4)) {
        const Scalar x2 = x * x;
        return c * c / (Scalar(2) * pi) * (Scalar(1) - x2 / Scalar(12) + x2 * x2 / Scalar(360));
    }
    // 1 - cos(x) = 2 sin^2(x/2) keeps full relative precision for moderate x.
    using std::sin;
    const Scalar s = sin(x / Scalar(2));
    return Scalar(2) * s * s / (pi * at * at);
}

/// Si(x) = integral of sin(u)/u over [0, x]. Odd in x; absolute error near
/// machine precision for all finite x.
double sine_integral(double x);

/// Closed form of the kernel integral over [0, T]:
/// (1/pi) (c Si(cT) - (1 - cos(cT)) / T), with value 0 at T = 0.
double kernel_half_integral(double c, double T);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
    // False when the subdivision budget ran out before the tolerance was met.
    bool converged = true;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr double kronrod21_nodes[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr double kronrod21_weights[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208620257410, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes above.
inline constexpr double gauss10_weights[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gauss_kronrod21(F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = kronrod21_weights[10] * fc;
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kronrod21_nodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kronrod21_weights[j] * pair;
        if (j % 2 == 1)
            gauss += gauss10_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (10/21) quadrature on a finite interval.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tolerance, rel_tolerance * |value|) or the
/// subdivision budget is spent. In the latter case the best value is still
/// returned, with converged = false and the unreduced error estimate.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, const QuadratureConfig& cfg = {})
{
    cfg.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw InvalidArgument("integrate_adaptive: need finite lo <= hi");
    QuadratureResult result;
    if (lo == hi)
        return result;

    std::priority_queue<detail::Segment> queue;
    queue.push(detail::gauss_kronrod21(f, lo, hi));
    double value = queue.top().value;
    double error = queue.top().error;

    auto tolerance = [&cfg](double v) {
        return std::max(cfg.abs_tolerance, cfg.rel_tolerance * std::abs(v));
    };

    while (error > tolerance(value) && result.subdivisions < cfg.max_subdivisions) {
        const detail::Segment worst = queue.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi))
            break; // interval can no longer be split in double precision
        queue.pop();
        const detail::Segment left = detail::gauss_kronrod21(f, worst.lo, mid);
        const detail::Segment right = detail::gauss_kronrod21(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++result.subdivisions;
    }

    // Re-sum to drop the drift accumulated by the incremental updates.
    value = 0.0;
    error = 0.0;
    double compensation = 0.0;
    while (!queue.empty()) {
        const double y = queue.top().value - compensation;
        const double t = value + y;
        compensation = (t - value) - y;
        value = t;
        error += queue.top().error;
        queue.pop();
    }
    result.value = value;
    result.error_estimate = error;
    result.converged = error <= tolerance(value);
    return result;
}

/// Integral of oscillatory_kernel(c, .) over [-R, R], with the analytic bound
/// 4/(pi R) on the two discarded tails added to the error estimate.
QuadratureResult kernel_mass(double c, double radius, const QuadratureConfig& cfg = {});

struct TailSum {
    double value = 0.0;
    // Bound on |true tail - value| covering the terms not summed explicitly.
    double tail_bound = 0.0;
    std::int64_t last_index = 0;
    std::size_t terms = 0;
};

/// Sum over k >= from_index of 2*pi*|c_k|^2 = (1 - cos(k c)) / (k^2 pi) for
/// the indicator of a band of width c, 0 < c < 2*pi.
///
/// Terms are summed explicitly up to an index K; the non-oscillating part of
/// the remainder, (1/pi) sum_{k>K} 1/k^2, is added in closed form and the
/// oscillating part sum_{k>K} cos(kc)/k^2 is bounded by summation by parts,
/// giving tail_bound = min(1/K, 1/(|sin(c/2)| (K+1)^2)) / pi.
TailSum coefficient_tail_sum(double c, std::int64_t from_index, const SeriesConfig& cfg = {});

} // namespace causalgap
