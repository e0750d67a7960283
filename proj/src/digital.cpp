#include "causalgap/digital.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace causalgap::digital {

namespace {

constexpr double pi = std::numbers::pi;

void require_digital(const BandpassInterval& band)
{
    if (band.mode() != Mode::Digital)
        throw InvalidArgument("digital operation needs a digital band");
}

} // namespace

DigitalDelay::DigitalDelay(std::int64_t N) : N_(N)
{
    if (N < 0)
        throw InvalidArgument("digital delay must be >= 0");
}

Complex fourier_coefficient(const BandpassInterval& band, std::int64_t k)
{
    require_digital(band);
    if (k == 0)
        return {band.bandwidth() / (2.0 * pi), 0.0};
    const double kd = static_cast<double>(k);
    const Complex numerator = std::polar(1.0, -kd * band.lower()) - std::polar(1.0, -kd * band.upper());
    return numerator / Complex(0.0, 2.0 * pi * kd);
}

FourierCoefficientTable::FourierCoefficientTable(const BandpassInterval& band, std::int64_t K)
    : band_(band), K_(K)
{
    require_digital(band);
    if (K < 0)
        throw InvalidArgument("coefficient window must be >= 0");
    coefficients_.resize(2 * K + 1);
    for (std::int64_t k = -K; k <= K; ++k)
        coefficients_[k + K] = fourier_coefficient(band, k);
}

Complex FourierCoefficientTable::at(std::int64_t k) const
{
    if (k < -K_ || k > K_)
        throw InvalidArgument("coefficient index " + std::to_string(k) + " outside window");
    return coefficients_[k + K_];
}

double FourierCoefficientTable::parseval_sum() const
{
    return 2.0 * pi * coefficients_.squaredNorm();
}

ApproximationReport causal_report(const BandpassInterval& band)
{
    return delayed_report(band, DigitalDelay{0});
}

ApproximationReport delayed_report(const BandpassInterval& band, DigitalDelay delay)
{
    require_digital(band);
    const double c = band.bandwidth();
    const std::int64_t N = delay.samples();

    double sum = 0.0;
    double compensation = 0.0;
    for (std::int64_t k = 1; k <= N; ++k) {
        const double kd = static_cast<double>(k);
        const double s = std::sin(0.5 * kd * c);
        const double term = 2.0 * s * s / (kd * kd * pi * c);
        const double t = sum + term;
        compensation += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    double bracket = 0.5 - c / (4.0 * pi) - (sum + compensation);
    if (bracket < 0.0) {
        if (bracket < -1e-12)
            throw NegativeRadicand("delayed digital bracket is " + std::to_string(bracket));
        bracket = 0.0;
    }

    ApproximationReport report;
    report.domain = Mode::Digital;
    report.subspace = N == 0 ? Subspace::Causal : Subspace::Delayed;
    report.delay = static_cast<double>(N);
    report.kernel_norm = std::sqrt(c / (2.0 * pi));
    const double root = std::sqrt(bracket);
    report.distance = report.kernel_norm * root;
    report.angle = std::asin(root);
    report.method = Method::ClosedForm;
    return report;
}

DigitalSequence ideal_impulse_response(const BandpassInterval& band, std::int64_t K)
{
    require_digital(band);
    if (K < 0)
        throw InvalidArgument("impulse response window must be >= 0");
    ComplexVector values(2 * K + 1);
    for (std::int64_t n = -K; n <= K; ++n)
        values[n + K] = fourier_coefficient(band, -n);
    return {-K, std::move(values)};
}

DigitalSequence best_causal_coefficients(const BandpassInterval& band, DigitalDelay delay,
                                         std::int64_t K)
{
    require_digital(band);
    const std::int64_t N = delay.samples();
    if (K < N)
        throw InvalidArgument("best_causal_coefficients needs K >= N");
    ComplexVector values(K + N + 1);
    for (std::int64_t n = -N; n <= K; ++n)
        values[n + N] = fourier_coefficient(band, -n);
    return {-N, std::move(values)};
}

double c0_ratio_angle(double C)
{
    if (!(C >= 0.0 && C <= 1.0))
        throw DomainError("c0_ratio_angle needs 0 <= C <= 1");
    // arcsin(sqrt((1 - C^2)/2)) written as atan2 to stay exact at C = 0 and C = 1.
    return std::atan2(std::sqrt(0.5 * (1.0 - C * C)), std::sqrt(0.5 * (1.0 + C * C)));
}

} // namespace causalgap::digital
