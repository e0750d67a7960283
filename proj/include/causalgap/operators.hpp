#pragma once

#include <cstdint>
#include <vector>

#include "causalgap/analog.hpp"
#include "causalgap/digital.hpp"
#include "causalgap/signal.hpp"

namespace causalgap::ops {

/// y[n] = sum_k x[k] h[n - k]; the output starts at x.offset() + h.offset().
DigitalSequence convolve_digital(const DigitalSequence& x, const DigitalSequence& h);

/// Riemann-sum convolution on a shared grid: dt times the discrete
/// convolution, starting at x.start() + h.start(). Throws GridMismatch when
/// the spacings differ; nothing is resampled.
SampledSignal convolve_analog(const SampledSignal& x, const SampledSignal& h);

Complex inner_product(const DigitalSequence& x, const DigitalSequence& y);

struct NormEstimate {
    // Largest observed sup|x*h| / ||x||_2; trial 0 is the matched filter.
    double lower = 0.0;
    // ||h||_2, the Cauchy-Schwarz bound.
    double upper = 0.0;
    std::vector<double> probe_ratios;
};

/// Brackets the norm of x -> x*h from l2 to l-infinity.
///
/// Random probes are complex Gaussian on the support of h widened by
/// 2*len(h) on each side, normalized to unit norm, drawn from a
/// std::mt19937_64 seeded with `seed`.
NormEstimate operator_norm_estimate(const DigitalSequence& h, int trials, std::uint64_t seed);

/// Orthogonal projection onto the filters realizable after N samples:
/// zeroes h[n] for n < -N and keeps the window.
DigitalSequence truncate_to_delay(const DigitalSequence& h, digital::DigitalDelay delay);

/// sum_{n < -N} |h[n]|^2, the squared distance removed by truncate_to_delay.
double truncation_residual(const DigitalSequence& h, digital::DigitalDelay delay);

/// Zeroes the samples with t < -T; the sample at t = -T is kept.
SampledSignal truncate_to_delay_analog(const SampledSignal& h, analog::AnalogDelay delay);

/// dt * sum_{t < -T} |h(t)|^2.
double truncation_residual_analog(const SampledSignal& h, analog::AnalogDelay delay);

} // namespace causalgap::ops
