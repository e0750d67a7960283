#pragma once

#include <cstdint>

#include "causalgap/kernel.hpp"
#include "causalgap/report.hpp"
#include "causalgap/signal.hpp"

namespace causalgap::digital {

/// Delay budget of N >= 0 samples; N = 0 is the causal case.
class DigitalDelay {
public:
    explicit DigitalDelay(std::int64_t N = 0);
    std::int64_t samples() const { return N_; }

private:
    std::int64_t N_;
};

/// c_k = (1/2pi) * integral_a^b e^{-ikw} dw, the Fourier coefficients of the
/// band indicator in the expansion chi(w) = sum_k c_k e^{ikw}.
Complex fourier_coefficient(const BandpassInterval& band, std::int64_t k);

/// c_k for k in [-K, K].
class FourierCoefficientTable {
public:
    FourierCoefficientTable(const BandpassInterval& band, std::int64_t K);

    const BandpassInterval& band() const { return band_; }
    std::int64_t window() const { return K_; }
    Complex at(std::int64_t k) const;
    const ComplexVector& coefficients() const { return coefficients_; }

    /// 2*pi * sum_{|k|<=K} |c_k|^2, which increases to b - a as K grows.
    double parseval_sum() const;

private:
    BandpassInterval band_;
    std::int64_t K_;
    ComplexVector coefficients_;
};

ApproximationReport causal_report(const BandpassInterval& band);

/// Distance and angle to the filters realizable after N samples of delay.
///
/// Both come from the bracket 1/2 - c/(4pi) - sum_{k=1}^N (1 - cos(kc))/(k^2 pi c),
/// c = b - a: angle = arcsin(sqrt(bracket)), distance = sqrt(c/(2pi)) sqrt(bracket).
ApproximationReport delayed_report(const BandpassInterval& band, DigitalDelay delay);

/// Impulse response of the ideal filter, h[n] = c_{-n} for n in [-K, K].
DigitalSequence ideal_impulse_response(const BandpassInterval& band, std::int64_t K);

/// Best approximant from the N-delay realizable filters, h[n] = c_{-n} for
/// n in [-N, K]; every index below -N is zero.
DigitalSequence best_causal_coefficients(const BandpassInterval& band, DigitalDelay delay,
                                         std::int64_t K);

/// Angle to the causal filters of a real-transfer-function filter whose zeroth
/// coefficient carries the fraction C of its norm: arcsin(sqrt((1 - C^2)/2)).
double c0_ratio_angle(double C);

} // namespace causalgap::digital
