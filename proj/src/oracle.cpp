#include "causalgap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace causalgap::oracle {

namespace {

constexpr double pi = std::numbers::pi;

class NeumaierSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        compensation_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

void validate_ladder(std::span<const double> ladder)
{
    if (ladder.size() < 4)
        throw InvalidArgument("limit_probe needs a ladder of at least 4 values");
    const bool increasing = ladder[1] > ladder[0];
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        const bool step_up = ladder[i] > ladder[i - 1];
        const bool step_down = ladder[i] < ladder[i - 1];
        if (increasing ? !step_up : !step_down)
            throw NonMonotoneLadder("limit_probe ladder must be strictly monotone");
    }
}

BandpassInterval centered_digital_band(double c)
{
    const double a = pi - 0.5 * c;
    return BandpassInterval::digital(a, a + c);
}

} // namespace

OracleEstimate analog_distance_oracle(const BandpassInterval& band, analog::AnalogDelay delay,
                                      double grid_radius, double dt)
{
    const double T = delay.seconds();
    // R = T is allowed: the region is empty and the estimate is 0.
    if (!(grid_radius >= T) || !(dt > 0.0))
        throw InvalidArgument("analog_distance_oracle needs grid_radius >= T and dt > 0");
    OracleEstimate out;
    out.tail_bound = 2.0 / (pi * grid_radius);
    NeumaierSum sum;
    for (std::size_t i = 0;; ++i) {
        const double t = -grid_radius + static_cast<double>(i) * dt;
        if (!(t < -T))
            break;
        sum.add(std::norm(analog::impulse_response(band, t)));
        ++out.terms;
    }
    out.value = std::sqrt(dt * sum.value());
    return out;
}

OracleEstimate digital_distance_oracle(const BandpassInterval& band, digital::DigitalDelay delay,
                                       std::int64_t K)
{
    const std::int64_t N = delay.samples();
    if (band.mode() != Mode::Digital)
        throw InvalidArgument("digital_distance_oracle needs a digital band");
    if (K <= N)
        throw InvalidArgument("digital_distance_oracle needs K > N");
    const double a = band.lower();
    const double b = band.upper();
    NeumaierSum sum;
    for (std::int64_t k = K; k > N; --k) {
        // (1/2pi) integral_a^b (cos(kw) - i sin(kw)) dw
        const double kd = static_cast<double>(k);
        const double re = (std::sin(kd * b) - std::sin(kd * a)) / (2.0 * pi * kd);
        const double im = (std::cos(kd * b) - std::cos(kd * a)) / (2.0 * pi * kd);
        sum.add(re * re + im * im);
    }
    OracleEstimate out;
    out.value = std::sqrt(sum.value());
    out.tail_bound = 2.0 / (static_cast<double>(K) * pi) / (2.0 * pi);
    out.terms = static_cast<std::size_t>(K - N);
    return out;
}

std::string_view to_string(ProbeQuantity quantity)
{
    switch (quantity) {
    case ProbeQuantity::DelayDistanceVsDelay:
        return "dT_vs_T";
    case ProbeQuantity::DelayDistanceVsBandwidth:
        return "dT_vs_bandwidth";
    case ProbeQuantity::DelayAngleVsSamples:
        return "thetaN_vs_N";
    case ProbeQuantity::AngleVsBandwidth:
        return "theta_vs_bandwidth";
    }
    return "unknown";
}

std::optional<ProbeQuantity> parse_probe_quantity(std::string_view name)
{
    for (auto q : {ProbeQuantity::DelayDistanceVsDelay, ProbeQuantity::DelayDistanceVsBandwidth,
                   ProbeQuantity::DelayAngleVsSamples, ProbeQuantity::AngleVsBandwidth})
        if (to_string(q) == name)
            return q;
    return std::nullopt;
}

std::optional<double> extrapolate_limit(std::span<const double> values)
{
    if (values.size() < 3)
        return std::nullopt;
    const double x1 = values[values.size() - 3];
    const double x2 = values[values.size() - 2];
    const double x3 = values[values.size() - 1];
    const double d1 = x2 - x1;
    const double d2 = x3 - x2;
    if (d2 == 0.0)
        return x3;
    if (!(std::abs(d2) < std::abs(d1)))
        return std::nullopt;
    return x3 - d2 * d2 / (d2 - d1);
}

LimitProbe limit_probe(ProbeQuantity quantity, std::span<const double> ladder, const ProbeSetup& setup)
{
    validate_ladder(ladder);
    LimitProbe probe{quantity, {}, std::nullopt};

    auto evaluate = [&](double p) -> double {
        switch (quantity) {
        case ProbeQuantity::DelayDistanceVsDelay:
            return analog::delayed_report(BandpassInterval::analog(0.0, setup.bandwidth),
                                          analog::AnalogDelay{p}, setup.quadrature)
                .distance;
        case ProbeQuantity::DelayDistanceVsBandwidth:
            return analog::delayed_report(BandpassInterval::analog(0.0, p),
                                          analog::AnalogDelay{setup.delay}, setup.quadrature)
                .distance;
        case ProbeQuantity::DelayAngleVsSamples:
            if (p < 0.0 || p != std::floor(p))
                throw InvalidArgument("thetaN_vs_N ladder must hold non-negative integers");
            return digital::delayed_report(centered_digital_band(setup.bandwidth),
                                           digital::DigitalDelay{static_cast<std::int64_t>(p)})
                .angle;
        case ProbeQuantity::AngleVsBandwidth:
            if (setup.mode == Mode::Analog)
                return analog::delayed_report(BandpassInterval::analog(0.0, p),
                                              analog::AnalogDelay{setup.delay}, setup.quadrature)
                    .angle;
            return digital::delayed_report(centered_digital_band(p),
                                           digital::DigitalDelay{setup.samples})
                .angle;
        }
        return 0.0;
    };

    std::vector<double> values;
    for (double p : ladder) {
        values.push_back(evaluate(p));
        probe.rows.push_back({p, values.back()});
    }
    probe.fitted_limit = extrapolate_limit(values);
    return probe;
}

} // namespace causalgap::oracle
