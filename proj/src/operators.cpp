#include "causalgap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace causalgap::ops {

namespace {

// Index of the first sample with t >= -T, allowing for rounding in the grid.
Eigen::Index first_kept_sample(const SampledSignal& h, double T)
{
    const double slack = 1e-9 * h.step();
    Eigen::Index i = 0;
    while (i < h.size() && h.time(i) < -T - slack)
        ++i;
    return i;
}

Eigen::Index first_kept_index(const DigitalSequence& h, std::int64_t N)
{
    const std::int64_t cut = -N - h.offset();
    return static_cast<Eigen::Index>(std::clamp<std::int64_t>(cut, 0, h.size()));
}

ComplexVector convolve(const ComplexVector& x, const ComplexVector& h)
{
    ComplexVector y = ComplexVector::Zero(x.size() + h.size() - 1);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        y.segment(i, h.size()) += x[i] * h;
    return y;
}

} // namespace

DigitalSequence convolve_digital(const DigitalSequence& x, const DigitalSequence& h)
{
    return {x.offset() + h.offset(), convolve(x.values(), h.values())};
}

SampledSignal convolve_analog(const SampledSignal& x, const SampledSignal& h)
{
    if (std::abs(x.step() - h.step()) > 1e-12 * x.step())
        throw GridMismatch("convolve_analog: sample spacings differ");
    return {x.start() + h.start(), x.step(), x.step() * convolve(x.values(), h.values())};
}

Complex inner_product(const DigitalSequence& x, const DigitalSequence& y)
{
    const std::int64_t lo = std::max(x.offset(), y.offset());
    const std::int64_t hi = std::min(x.last_index(), y.last_index());
    Complex sum{0.0, 0.0};
    for (std::int64_t n = lo; n <= hi; ++n)
        sum += x[n] * std::conj(y[n]);
    return sum;
}

NormEstimate operator_norm_estimate(const DigitalSequence& h, int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw InvalidArgument("operator_norm_estimate needs at least one trial");
    NormEstimate estimate;
    estimate.upper = h.norm();
    if (estimate.upper == 0.0)
        throw ZeroKernel("operator_norm_estimate: kernel has zero norm");

    auto ratio = [&h](const ComplexVector& x) {
        return convolve(x, h.values()).cwiseAbs().maxCoeff() / x.norm();
    };

    estimate.probe_ratios.push_back(ratio(conj_reflect(h).values()));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const Eigen::Index length = 5 * h.size();
    ComplexVector probe(length);
    for (int trial = 1; trial < trials; ++trial) {
        for (Eigen::Index i = 0; i < length; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            probe[i] = {re, im};
        }
        probe.normalize();
        estimate.probe_ratios.push_back(ratio(probe));
    }
    estimate.lower = *std::max_element(estimate.probe_ratios.begin(), estimate.probe_ratios.end());
    return estimate;
}

DigitalSequence truncate_to_delay(const DigitalSequence& h, digital::DigitalDelay delay)
{
    ComplexVector values = h.values();
    values.head(first_kept_index(h, delay.samples())).setZero();
    return {h.offset(), std::move(values)};
}

double truncation_residual(const DigitalSequence& h, digital::DigitalDelay delay)
{
    return h.values().head(first_kept_index(h, delay.samples())).squaredNorm();
}

SampledSignal truncate_to_delay_analog(const SampledSignal& h, analog::AnalogDelay delay)
{
    ComplexVector values = h.values();
    values.head(first_kept_sample(h, delay.seconds())).setZero();
    return {h.start(), h.step(), std::move(values)};
}

double truncation_residual_analog(const SampledSignal& h, analog::AnalogDelay delay)
{
    return h.step() * h.values().head(first_kept_sample(h, delay.seconds())).squaredNorm();
}

} // namespace causalgap::ops
