#include "causalgap/analog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace causalgap::analog {

namespace {

constexpr double pi = std::numbers::pi;
const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * pi);

// sin(x)/x with its limit at 0.
double sinc(double x)
{
    if (std::abs(x) < 1e-4)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

double distance_error(double squared_error, double distance)
{
    if (distance == 0.0)
        return std::sqrt(squared_error);
    return std::min(std::sqrt(squared_error), squared_error / (2.0 * distance));
}

} // namespace

AnalogDelay::AnalogDelay(double T) : T_(T)
{
    if (!(T >= 0.0) || !std::isfinite(T))
        throw InvalidArgument("analog delay must be finite and >= 0");
}

TransferFunctionSamples::TransferFunctionSamples(double xi_min, double xi_max, ComplexVector values)
    : xi_min_(xi_min), xi_max_(xi_max), values_(std::move(values))
{
    if (values_.size() < 2)
        throw InvalidArgument("transfer function grid needs at least 2 points");
    if (!std::isfinite(xi_min) || !std::isfinite(xi_max) || !(xi_min < xi_max))
        throw InvalidArgument("transfer function grid must be strictly increasing");
    if (!values_.allFinite())
        throw InvalidArgument("transfer function samples must be finite");
}

double TransferFunctionSamples::l2_norm() const
{
    const Eigen::Index n = values_.size();
    const double ends = 0.5 * (std::norm(values_[0]) + std::norm(values_[n - 1]));
    return std::sqrt(step() * (values_.squaredNorm() - ends));
}

Complex impulse_response(const BandpassInterval& band, double t)
{
    const double center = 0.5 * (band.lower() + band.upper());
    const double c = band.bandwidth();
    const double magnitude = c * sinc(0.5 * c * t) * inv_sqrt_2pi;
    return std::polar(1.0, center * t) * magnitude;
}

ApproximationReport causal_report(const BandpassInterval& band)
{
    const double c = band.bandwidth();
    ApproximationReport report;
    report.domain = Mode::Analog;
    report.subspace = Subspace::Causal;
    report.kernel_norm = std::sqrt(c);
    report.distance = std::sqrt(c / 2.0);
    report.angle = pi / 4.0;
    report.method = Method::ClosedForm;
    return report;
}

ApproximationReport delayed_report(const BandpassInterval& band, AnalogDelay delay,
                                   const QuadratureConfig& cfg)
{
    const double c = band.bandwidth();
    const double T = delay.seconds();
    if (T == 0.0) {
        // Empty quadrature window: the causal closed form holds exactly.
        ApproximationReport report = causal_report(band);
        report.method = Method::Quadrature;
        return report;
    }

    const QuadratureResult window =
        integrate_adaptive([c](double t) { return oscillatory_kernel(c, t); }, -T, T, cfg);
    const double squared = std::max(0.0, 0.5 * c - 0.5 * window.value);
    const double squared_si = std::max(0.0, 0.5 * c - kernel_half_integral(c, T));

    ApproximationReport report;
    report.domain = Mode::Analog;
    report.subspace = Subspace::Delayed;
    report.delay = T;
    report.kernel_norm = std::sqrt(c);
    report.distance = std::sqrt(squared);
    report.angle = angle_from_ratio(report.distance, report.kernel_norm);
    report.method = Method::Quadrature;
    report.error_estimate = distance_error(0.5 * window.error_estimate, report.distance);
    report.converged = window.converged;
    report.cross_check_distance = std::sqrt(squared_si);
    return report;
}

ApproximationReport real_transfer_report(const TransferFunctionSamples& H)
{
    const ComplexVector& v = H.values();
    const double sup = v.cwiseAbs().maxCoeff();
    const double imag_sup = v.imag().cwiseAbs().maxCoeff();
    if (imag_sup > 1e-14 * sup)
        throw NonRealInput("transfer function has imaginary part " + std::to_string(imag_sup));

    ApproximationReport report;
    report.domain = Mode::Analog;
    report.subspace = Subspace::Causal;
    report.kernel_norm = H.l2_norm();
    report.distance = report.kernel_norm / std::sqrt(2.0);
    report.angle = report.kernel_norm > 0.0 ? pi / 4.0 : 0.0;
    report.method = Method::ClosedForm;
    return report;
}

double memoryless_angle_check(const SampledSignal& h)
{
    const double first = h.start();
    const double last = h.time(h.size() - 1);
    if (std::abs(first + last) > 1e-9 * h.step())
        throw InvalidArgument("memoryless_angle_check needs a grid symmetric about t = 0");

    const double zero_slack = 1e-9 * h.step();
    double past = 0.0;
    double total = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        const double e = std::norm(h.values()[i]);
        total += e;
        if (h.time(i) < -zero_slack)
            past += e;
    }
    if (total == 0.0)
        throw ZeroKernel("memoryless_angle_check: kernel has zero norm");
    const double ratio = std::sqrt(past / total);
    if (ratio >= 1.0 - 1e-12)
        return pi / 2.0;
    return std::asin(ratio);
}

PaleyWienerReport paley_wiener_diagnostic(const TransferFunctionSamples& H)
{
    const Eigen::Index n = H.size();
    const Eigen::VectorXd magnitude = H.values().cwiseAbs();

    auto log_integral = [&](double floor) {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double xi = H.xi(i);
            const double g = std::abs(std::log(std::max(magnitude[i], floor))) / (1.0 + xi * xi);
            sum += (i == 0 || i == n - 1) ? 0.5 * g : g;
        }
        return sum * H.step();
    };

    PaleyWienerReport report;
    for (int exponent = 3; exponent <= 12; ++exponent) {
        const double floor = std::pow(10.0, -exponent);
        report.ladder.push_back({floor, log_integral(floor)});
    }
    report.integral_estimate = report.ladder.back().integral;
    report.slope_per_decade =
        report.ladder.back().integral - report.ladder[report.ladder.size() - 2].integral;

    Eigen::Index run_start = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
        const bool small = magnitude[i] < 1e-14;
        if (small && run_start < 0)
            run_start = i;
        if (!small && run_start >= 0) {
            report.vanishing_intervals.emplace_back(H.xi(run_start), H.xi(i - 1));
            run_start = -1;
        }
    }
    if (run_start >= 0)
        report.vanishing_intervals.emplace_back(H.xi(run_start), H.xi(n - 1));

    // Identically zero on a cell of positive length.
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        if (magnitude[i] == 0.0 && magnitude[i + 1] == 0.0)
            report.vanishes_identically = true;

    const bool growing = report.slope_per_decade > paley_wiener_slope_threshold;
    report.verdict = (growing || report.vanishes_identically)
                         ? RealizabilityVerdict::DivergenceEvidence
                         : RealizabilityVerdict::ConsistentWithRealizable;
    return report;
}

std::string_view to_string(RealizabilityVerdict verdict)
{
    return verdict == RealizabilityVerdict::DivergenceEvidence ? "divergence_evidence"
                                                               : "consistent_with_realizable";
}

} // namespace causalgap::analog
