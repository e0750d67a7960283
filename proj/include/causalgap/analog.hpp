#pragma once

#include <utility>
#include <vector>

#include "causalgap/kernel.hpp"
#include "causalgap/report.hpp"
#include "causalgap/signal.hpp"

namespace causalgap::analog {

/// Delay budget T >= 0 in seconds; T = 0 is the causal case.
class AnalogDelay {
public:
    explicit AnalogDelay(double T = 0.0);
    double seconds() const { return T_; }

private:
    double T_;
};

/// Transfer function samples H(xi) on a uniform grid from xi_min to xi_max.
class TransferFunctionSamples {
public:
    TransferFunctionSamples(double xi_min, double xi_max, ComplexVector values);

    double xi_min() const { return xi_min_; }
    double xi_max() const { return xi_max_; }
    Eigen::Index size() const { return values_.size(); }
    double step() const { return (xi_max_ - xi_min_) / static_cast<double>(values_.size() - 1); }
    double xi(Eigen::Index i) const { return xi_min_ + static_cast<double>(i) * step(); }
    const ComplexVector& values() const { return values_; }

    /// Trapezoid-rule L2 norm over the grid.
    double l2_norm() const;

private:
    double xi_min_;
    double xi_max_;
    ComplexVector values_;
};

template <typename F>
TransferFunctionSamples sample_transfer(F&& f, double xi_min, double xi_max, Eigen::Index points)
{
    ComplexVector values(points);
    const double step = (xi_max - xi_min) / static_cast<double>(points - 1);
    for (Eigen::Index i = 0; i < points; ++i)
        values[i] = f(xi_min + static_cast<double>(i) * step);
    return {xi_min, xi_max, std::move(values)};
}

/// Inverse Fourier transform of the band indicator,
/// h(t) = (1/sqrt(2 pi)) * integral_a^b e^{i w t} dw, with h(0) = (b - a)/sqrt(2 pi).
///
/// Evaluated as e^{i m t} * 2 sin(c t / 2) / (t sqrt(2 pi)) with m the band
/// center and c the width, which equals the textbook expression
/// [sin(bt) - sin(at) - i(cos(bt) - cos(at))] / (t sqrt(2 pi)) without its
/// cancellation near t = 0.
Complex impulse_response(const BandpassInterval& band, double t);

/// Best causal approximation of the ideal filter: angle pi/4, distance sqrt((b-a)/2).
ApproximationReport causal_report(const BandpassInterval& band);

/// Distance and angle to the filters realizable after delay T.
///
/// d(T)^2 = (b-a)/2 - (1/2) * integral_{-T}^{T} kernel. The integral is taken
/// by adaptive quadrature (the reported value) and again through the sine
/// integral closed form (cross_check_distance).
ApproximationReport delayed_report(const BandpassInterval& band, AnalogDelay delay,
                                   const QuadratureConfig& cfg = {});

/// Any filter with a real-valued transfer function sits at pi/4 from the
/// causal filters; the distance is its norm over sqrt(2).
ApproximationReport real_transfer_report(const TransferFunctionSamples& H);

/// Angle between the filter with sampled kernel h and the causal subspace,
/// arcsin(||h restricted to t < 0|| / ||h||). The grid must be symmetric about 0.
double memoryless_angle_check(const SampledSignal& h);

enum class RealizabilityVerdict { ConsistentWithRealizable, DivergenceEvidence };

struct FloorRung {
    double floor;
    double integral;
};

struct PaleyWienerReport {
    // Log integral at the smallest floor of the ladder.
    double integral_estimate = 0.0;
    std::vector<FloorRung> ladder;
    // Growth of the integral over the last decade of the floor ladder.
    double slope_per_decade = 0.0;
    // Maximal grid runs where |H| < 1e-14, as (xi_first, xi_last).
    std::vector<std::pair<double, double>> vanishing_intervals;
    // True when H is exactly zero on a run of at least two grid points.
    bool vanishes_identically = false;
    RealizabilityVerdict verdict = RealizabilityVerdict::ConsistentWithRealizable;
};

inline constexpr double paley_wiener_slope_threshold = 0.5;

/// Numerical evidence for or against finiteness of
/// integral |log|H(xi)|| / (1 + xi^2) dxi on the sampled window.
PaleyWienerReport paley_wiener_diagnostic(const TransferFunctionSamples& H);

std::string_view to_string(RealizabilityVerdict verdict);

} // namespace causalgap::analog
