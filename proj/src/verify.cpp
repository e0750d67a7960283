#include "causalgap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "causalgap/analog.hpp"
#include "causalgap/digital.hpp"
#include "causalgap/operators.hpp"
#include "causalgap/oracle.hpp"
#include "causalgap/render.hpp"

namespace causalgap {

namespace {

constexpr double pi = std::numbers::pi;

// Worst observed deviation against a limit; passes when worst <= limit.
struct Tracker {
    explicit Tracker(double limit_scale) : scale(limit_scale) {}

    double scale;
    double worst = 0.0;
    bool ok = true;
    std::string failure;

    void check(double deviation, double limit, const std::string& where)
    {
        worst = std::max(worst, deviation);
        limit *= scale;
        if (!(deviation <= limit) && ok) {
            ok = false;
            failure = where + ": deviation " + format_scientific(deviation) + " > " +
                      format_scientific(limit);
        }
    }

    CheckResult result(std::string name) const
    {
        return {std::move(name), ok, ok ? "worst " + format_scientific(worst) : failure};
    }
};

std::string label(double a, double b)
{
    return "[" + format_double(a) + ", " + format_double(b) + "]";
}

void analog_checks(std::mt19937_64& rng, double scale, std::vector<CheckResult>& out)
{
    std::uniform_real_distribution<double> edge(-50.0, 50.0);
    auto random_band = [&] {
        double a = edge(rng);
        double b = edge(rng);
        if (a > b)
            std::swap(a, b);
        if (a == b)
            b = a + 1.0;
        return BandpassInterval::analog(a, b);
    };

    {
        Tracker t{scale};
        for (int i = 0; i < 100; ++i) {
            const auto band = random_band();
            const auto r = analog::causal_report(band);
            t.check(std::abs(r.angle - pi / 4.0), 1e-15, label(band.lower(), band.upper()));
            t.check(std::abs(r.distance - std::sqrt(band.bandwidth() / 2.0)), 1e-15,
                    label(band.lower(), band.upper()));
        }
        out.push_back(t.result("analog.causal_angle_pi_over_4"));
    }
    {
        Tracker t{scale};
        for (int i = 0; i < 20; ++i) {
            const auto band = random_band();
            const auto causal = analog::causal_report(band);
            const auto delayed = analog::delayed_report(band, analog::AnalogDelay{0.0});
            t.check(std::abs(causal.distance - delayed.distance), 1e-12,
                    label(band.lower(), band.upper()));
            t.check(std::abs(causal.angle - delayed.angle), 1e-12, label(band.lower(), band.upper()));
        }
        out.push_back(t.result("analog.zero_delay_matches_causal"));
    }
    {
        Tracker t{scale};
        for (double c : {0.5, 1.0, pi, 6.0})
            for (double T : {0.1, 1.0, 10.0}) {
                const auto r = analog::delayed_report(BandpassInterval::analog(0.0, c),
                                                      analog::AnalogDelay{T});
                t.check(std::abs(r.distance - *r.cross_check_distance), 1e-8,
                        "c=" + format_double(c) + " T=" + format_double(T));
            }
        out.push_back(t.result("analog.quadrature_matches_sine_integral"));
    }
    {
        Tracker t{scale};
        std::uniform_real_distribution<double> delay(0.0, 100.0);
        for (int i = 0; i < 20; ++i) {
            const auto band = random_band();
            double T1 = delay(rng);
            double T2 = delay(rng);
            if (T1 > T2)
                std::swap(T1, T2);
            const auto r1 = analog::delayed_report(band, analog::AnalogDelay{T1});
            const auto r2 = analog::delayed_report(band, analog::AnalogDelay{T2});
            t.check(std::max(0.0, r2.distance - r1.distance), 1e-10,
                    label(band.lower(), band.upper()));
            t.check(std::max(0.0, r1.angle - pi / 4.0), 1e-12, label(band.lower(), band.upper()));
        }
        out.push_back(t.result("analog.delay_distance_nonincreasing"));
    }
    {
        // Coarse grid keeps the run short; the acceptance suite uses R = 1e4, dt = 1e-3.
        Tracker t{scale};
        const double R = 1e3;
        const double dt = 1e-2;
        for (auto band : {BandpassInterval::analog(0.0, 1.0), BandpassInterval::analog(-2.0, 3.0)})
            for (double T : {0.0, 2.0}) {
                const auto r = analog::delayed_report(band, analog::AnalogDelay{T});
                const auto o = oracle::analog_distance_oracle(band, analog::AnalogDelay{T}, R, dt);
                t.check(std::abs(r.distance - o.value), o.tail_bound + 5.0 * dt,
                        label(band.lower(), band.upper()) + " T=" + format_double(T));
            }
        out.push_back(t.result("analog.riemann_oracle_agreement"));
    }
    {
        const auto band = BandpassInterval::analog(-1.0, 2.0);
        const auto H = analog::sample_transfer(
            [&](double xi) { return xi >= -1.0 && xi <= 2.0 ? 1.0 : 0.0; }, -4.0, 5.0, 9001);
        const auto r = analog::real_transfer_report(H);
        const auto causal = analog::causal_report(band);
        Tracker t{scale};
        t.check(std::abs(r.distance - causal.distance), 2e-3, "chi[-1,2]");
        t.check(std::abs(r.angle - causal.angle), 1e-15, "chi[-1,2]");
        out.push_back(t.result("analog.real_transfer_matches_causal"));
    }
    {
        const auto ideal = analog::paley_wiener_diagnostic(analog::sample_transfer(
            [](double xi) { return xi >= 0.0 && xi <= 2.0 ? 1.0 : 0.0; }, -10.0, 10.0, 4001));
        const auto gaussian = analog::paley_wiener_diagnostic(
            analog::sample_transfer([](double xi) { return std::exp(-xi * xi); }, -10.0, 10.0, 4001));
        const bool ok = ideal.verdict == analog::RealizabilityVerdict::DivergenceEvidence &&
                        !ideal.vanishing_intervals.empty() &&
                        gaussian.verdict == analog::RealizabilityVerdict::ConsistentWithRealizable;
        out.push_back({"analog.paley_wiener_verdicts", ok,
                       "ideal slope " + format_scientific(ideal.slope_per_decade) +
                           ", gaussian slope " + format_scientific(gaussian.slope_per_decade)});
    }
}

void digital_checks(double scale, std::vector<CheckResult>& out)
{
    const double widths[] = {0.1, 1.0, pi, 5.0, 6.2};
    auto centered = [](double c) { return BandpassInterval::digital(pi - c / 2.0, pi + c / 2.0); };

    {
        Tracker t{scale};
        const std::int64_t K = 10000;
        for (double c : widths) {
            const digital::FourierCoefficientTable table(centered(c), K);
            const double defect = c - table.parseval_sum();
            t.check(std::abs(defect), 4.0 / (static_cast<double>(K) * pi) + 1e-10,
                    "c=" + format_double(c));
            t.check(-defect, 1e-12, "c=" + format_double(c) + " (overshoot)");
        }
        out.push_back(t.result("digital.parseval"));
    }
    {
        Tracker t{scale};
        for (double c : widths)
            for (std::int64_t N : {0, 1, 2, 5, 20, 100}) {
                const auto r = digital::delayed_report(centered(c), digital::DigitalDelay{N});
                const auto tail = coefficient_tail_sum(c, N + 1);
                t.check(std::abs(r.distance * r.distance * 2.0 * pi - tail.value), 1e-9,
                        "c=" + format_double(c) + " N=" + std::to_string(N));
            }
        out.push_back(t.result("digital.closed_form_matches_tail_sum"));
    }
    {
        // The oracle's truncation bound applies to the squared distance.
        Tracker t{scale};
        const std::int64_t K = 100000;
        for (double c : widths)
            for (std::int64_t N : {0, 1, 5, 50}) {
                const auto band = centered(c);
                const auto r = digital::delayed_report(band, digital::DigitalDelay{N});
                const auto o = oracle::digital_distance_oracle(band, digital::DigitalDelay{N}, K);
                t.check(std::abs(r.distance * r.distance - o.value * o.value), o.tail_bound + 1e-9,
                        "c=" + format_double(c) + " N=" + std::to_string(N));
            }
        out.push_back(t.result("digital.oracle_agreement_squared"));
    }
    {
        Tracker t{scale};
        for (double c : widths)
            for (std::int64_t N = 0; N <= 60; ++N) {
                const auto band = centered(c);
                const auto r = digital::delayed_report(band, digital::DigitalDelay{N});
                const std::string where = "c=" + format_double(c) + " N=" + std::to_string(N);
                t.check(std::abs(r.distance - r.kernel_norm * std::sin(r.angle)), 1e-12, where);
                t.check(r.angle <= 0.0 ? 1.0 : 0.0, 0.0, where + " angle not positive");
                t.check(r.angle >= pi / 4.0 ? 1.0 : 0.0, 0.0, where + " angle not below pi/4");
                const auto next = digital::delayed_report(band, digital::DigitalDelay{N + 1});
                const double s = std::sin(0.5 * static_cast<double>(N + 1) * c);
                const bool term_nonzero = 2.0 * s * s > 1e-12;
                if (term_nonzero)
                    t.check(next.angle < r.angle ? 0.0 : 1.0, 0.0, where + " not strictly decreasing");
                else
                    t.check(next.angle <= r.angle ? 0.0 : 1.0, 0.0, where + " increased");
            }
        out.push_back(t.result("digital.angle_bracket_and_monotonicity"));
    }
    {
        Tracker t{scale};
        for (double c : widths) {
            const auto r = digital::causal_report(centered(c));
            t.check(std::abs(digital::c0_ratio_angle(std::sqrt(c / (2.0 * pi))) - r.angle), 1e-12,
                    "c=" + format_double(c));
        }
        out.push_back(t.result("digital.c0_ratio_matches_closed_form"));
    }
}

DigitalSequence random_kernel(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> length(1, 256);
    std::uniform_int_distribution<int> offset(-300, 300);
    std::normal_distribution<double> gauss;
    ComplexVector values(length(rng));
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        values[i] = {re, im};
    }
    if (values.norm() == 0.0)
        values[0] = 1.0;
    return {offset(rng), std::move(values)};
}

void operator_checks(std::mt19937_64& rng, double scale, std::vector<CheckResult>& out)
{
    {
        Tracker matched{scale};
        Tracker probes{scale};
        for (int i = 0; i < 50; ++i) {
            const auto h = random_kernel(rng);
            const auto est = ops::operator_norm_estimate(h, 8, rng());
            const std::string where = "kernel " + std::to_string(i);
            matched.check(std::abs(est.probe_ratios.front() - est.upper), 1e-12, where);
            for (double r : est.probe_ratios)
                probes.check(std::max(0.0, r - est.upper), 1e-12, where);
        }
        out.push_back(matched.result("operators.matched_filter_attains_norm"));
        out.push_back(probes.result("operators.random_probes_below_norm"));
    }
    {
        Tracker t{scale};
        std::uniform_int_distribution<int> shift_by(-20, 20);
        for (int i = 0; i < 20; ++i) {
            const auto x = random_kernel(rng);
            const auto h = random_kernel(rng);
            const int m = shift_by(rng);
            const auto lhs = ops::convolve_digital(shift(x, m), h);
            const auto rhs = shift(ops::convolve_digital(x, h), m);
            const bool same = lhs.offset() == rhs.offset() && lhs.values() == rhs.values();
            t.check(same ? 0.0 : 1.0, 0.0, "pair " + std::to_string(i));
        }
        out.push_back(t.result("operators.time_invariance"));
    }
    {
        Tracker t{scale};
        std::uniform_int_distribution<int> delay(0, 40);
        for (int i = 0; i < 20; ++i) {
            const auto h = random_kernel(rng);
            const digital::DigitalDelay N{delay(rng)};
            const auto kept = ops::truncate_to_delay(h, N);
            const DigitalSequence removed{h.offset(), h.values() - kept.values()};
            const std::string where = "kernel " + std::to_string(i);
            t.check(std::abs(ops::inner_product(removed, kept)), 0.0, where + " overlap");
            const double residual = ops::truncation_residual(h, N);
            t.check(std::abs(h.squared_norm() - kept.squared_norm() - residual),
                    1e-12 * h.squared_norm(), where + " pythagoras");
        }
        out.push_back(t.result("operators.truncation_is_orthogonal_projection"));
    }
}

} // namespace

std::optional<VerifySuite> parse_suite(std::string_view name)
{
    if (name == "all")
        return VerifySuite::All;
    if (name == "analog")
        return VerifySuite::Analog;
    if (name == "digital")
        return VerifySuite::Digital;
    if (name == "operators")
        return VerifySuite::Operators;
    return std::nullopt;
}

std::vector<CheckResult> run_verification(VerifySuite suite, std::uint64_t seed,
                                         double tolerance_scale)
{
    if (!(tolerance_scale >= 0.0) || !std::isfinite(tolerance_scale))
        throw InvalidArgument("tolerance scale must be finite and >= 0");
    const double scale = tolerance_scale;
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    if (suite == VerifySuite::All || suite == VerifySuite::Analog)
        analog_checks(rng, scale, out);
    if (suite == VerifySuite::All || suite == VerifySuite::Digital)
        digital_checks(scale, out);
    if (suite == VerifySuite::All || suite == VerifySuite::Operators)
        operator_checks(rng, scale, out);
    return out;
}

} // namespace causalgap
