#pragma once

// Brute-force counterparts of the closed forms. Nothing here calls the
// quadrature routine, the sine integral or the coefficient magnitude formula.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "causalgap/analog.hpp"
#include "causalgap/digital.hpp"

namespace causalgap::oracle {

struct OracleEstimate {
    double value = 0.0;
    // Bound on the squared distance left out of the finite sum.
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

/// sqrt(dt * sum |h(t)|^2) over the left-endpoint grid t = -R + i*dt, t < -T,
/// with h the analog ideal impulse response; tail_bound = 2/(pi R).
OracleEstimate analog_distance_oracle(const BandpassInterval& band, analog::AnalogDelay delay,
                                      double grid_radius, double dt);

/// sqrt(sum_{k=N+1}^{K} |c_k|^2) with each c_k taken from the real and
/// imaginary parts of its defining integral; tail_bound = 2/(K pi)/(2 pi).
OracleEstimate digital_distance_oracle(const BandpassInterval& band, digital::DigitalDelay delay,
                                       std::int64_t K);

enum class ProbeQuantity {
    DelayDistanceVsDelay,     // analog d(T) along T, band [0, c]
    DelayDistanceVsBandwidth, // analog d(T) along c = b - a, T fixed
    DelayAngleVsSamples,      // digital theta(N) along N, width c centered on pi
    AngleVsBandwidth,         // theta along c: digital theta(N) or analog theta(T)
};

std::string_view to_string(ProbeQuantity quantity);
std::optional<ProbeQuantity> parse_probe_quantity(std::string_view name);

struct ProbeSetup {
    double bandwidth = 2.0;
    double delay = 1.0;
    std::int64_t samples = 0;
    Mode mode = Mode::Digital; // only read by AngleVsBandwidth
    QuadratureConfig quadrature{};
};

struct ProbeRow {
    double parameter;
    double value;
};

struct LimitProbe {
    ProbeQuantity quantity;
    std::vector<ProbeRow> rows;
    // Empty when the tail of the table does not contract.
    std::optional<double> fitted_limit;
};

/// Aitken delta-squared extrapolation on the last three values, which is
/// Richardson extrapolation for power-law convergence along a geometric
/// ladder. Returns nothing unless |x3 - x2| < |x2 - x1|.
std::optional<double> extrapolate_limit(std::span<const double> values);

LimitProbe limit_probe(ProbeQuantity quantity, std::span<const double> ladder,
                       const ProbeSetup& setup = {});

} // namespace causalgap::oracle
