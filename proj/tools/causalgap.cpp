// causalgap: distances and angles between ideal bandpass filters and the
// realizable (causal or delay-limited) filters.
//
// Exit codes: 0 success, 1 failed verification check, 2 invalid arguments,
// 3 quadrature hit its subdivision limit (output still written),
// 4 output path not writable.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causalgap/analog.hpp"
#include "causalgap/digital.hpp"
#include "causalgap/operators.hpp"
#include "causalgap/render.hpp"
#include "causalgap/verify.hpp"

namespace {

using namespace causalgap;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_subdivision_limit = 3;
constexpr int exit_unwritable = 4;

constexpr double pi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnwritableOutput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat require_format(const std::string& name)
{
    if (auto f = parse_format(name))
        return *f;
    throw UsageError("unknown format '" + name + "' (expected text, json or csv)");
}

QuadratureConfig quadrature_from(std::optional<double> tol, std::optional<std::size_t> max_subdivisions)
{
    QuadratureConfig cfg;
    if (tol) {
        cfg.abs_tolerance = *tol;
        cfg.rel_tolerance = *tol;
    }
    if (max_subdivisions)
        cfg.max_subdivisions = *max_subdivisions;
    cfg.validate();
    return cfg;
}

// "-" writes to stdout.
void emit(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw UnwritableOutput("cannot open '" + path + "' for writing");
    file << text;
    file.flush();
    if (!file)
        throw UnwritableOutput("failed writing '" + path + "'");
}

struct AnalogArgs {
    double a = 0.0;
    double b = 0.0;
    std::optional<double> delay;
    std::optional<double> quad_tol;
    std::optional<std::size_t> max_subdivisions;
    std::string format = "text";
};

int run_analog(const AnalogArgs& args)
{
    const auto format = require_format(args.format);
    const auto band = BandpassInterval::analog(args.a, args.b);
    const auto cfg = quadrature_from(args.quad_tol, args.max_subdivisions);
    const ApproximationReport report = args.delay
                                           ? analog::delayed_report(band, analog::AnalogDelay{*args.delay}, cfg)
                                           : analog::causal_report(band);
    std::cout << render_report(band, report, format);
    if (!report.converged) {
        std::cerr << "causalgap: quadrature reached its subdivision limit; error estimate "
                  << format_double(report.error_estimate) << '\n';
        return exit_subdivision_limit;
    }
    return exit_ok;
}

struct DigitalArgs {
    double a = 0.0;
    double b = 0.0;
    std::int64_t delay_samples = 0;
    std::optional<std::int64_t> coeffs;
    std::string format = "text";
};

int run_digital(const DigitalArgs& args)
{
    const auto format = require_format(args.format);
    const auto band = BandpassInterval::digital(args.a, args.b);
    if (args.coeffs) {
        if (*args.coeffs < 0)
            throw UsageError("--coeffs must be >= 0");
        const digital::FourierCoefficientTable table(band, *args.coeffs);
        std::ostringstream out;
        out << "k,re,im\n";
        for (std::int64_t k = -*args.coeffs; k <= *args.coeffs; ++k) {
            const Complex ck = table.at(k);
            out << k << ',' << format_double(ck.real()) << ',' << format_double(ck.imag()) << '\n';
        }
        std::cout << out.str();
        return exit_ok;
    }
    const auto report = digital::delayed_report(band, digital::DigitalDelay{args.delay_samples});
    std::cout << render_report(band, report, format);
    return exit_ok;
}

struct SweepArgs {
    std::string mode;
    std::string vary;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> center;
    std::optional<double> delay;
    std::int64_t delay_samples = 0;
    std::optional<double> quad_tol;
    std::string out;
};

int run_sweep(const SweepArgs& args)
{
    if (args.mode != "analog" && args.mode != "digital")
        throw UsageError("--mode must be analog or digital");
    if (args.vary != "bandwidth" && args.vary != "delay")
        throw UsageError("--vary must be bandwidth or delay");
    if (args.steps < 2)
        throw UsageError("--steps must be at least 2");
    if (!(args.from < args.to))
        throw UsageError("--from must be below --to");
    const bool analog_mode = args.mode == "analog";
    const auto cfg = quadrature_from(args.quad_tol, std::nullopt);

    std::vector<double> params;
    for (int i = 0; i < args.steps; ++i)
        params.push_back(args.from + (args.to - args.from) * i / (args.steps - 1));
    if (args.vary == "delay" && !analog_mode) {
        for (double& p : params)
            p = std::round(p);
        params.erase(std::unique(params.begin(), params.end()), params.end());
    }

    auto band_for = [&](double param) {
        if (args.vary == "delay") {
            if (!args.a || !args.b)
                throw UsageError("delay sweeps need --a and --b");
            return BandpassInterval(*args.a, *args.b, analog_mode ? Mode::Analog : Mode::Digital);
        }
        if (analog_mode) {
            const double lo = args.a.value_or(0.0);
            return BandpassInterval::analog(lo, lo + param);
        }
        const double mid = args.center.value_or(pi);
        return BandpassInterval::digital(mid - 0.5 * param, mid + 0.5 * param);
    };

    bool converged = true;
    std::string csv(sweep_csv_header);
    csv += '\n';
    for (double p : params) {
        const auto band = band_for(p);
        ApproximationReport report;
        if (analog_mode) {
            const std::optional<double> T = args.vary == "delay" ? std::optional<double>(p) : args.delay;
            report = T ? analog::delayed_report(band, analog::AnalogDelay{*T}, cfg)
                       : analog::causal_report(band);
        } else {
            const std::int64_t N =
                args.vary == "delay" ? static_cast<std::int64_t>(p) : args.delay_samples;
            report = digital::delayed_report(band, digital::DigitalDelay{N});
        }
        converged = converged && report.converged;
        csv += sweep_csv_row(p, report);
        csv += '\n';
    }
    emit(args.out, csv);
    if (!converged) {
        std::cerr << "causalgap: quadrature reached its subdivision limit in at least one row\n";
        return exit_subdivision_limit;
    }
    return exit_ok;
}

struct ImpulseArgs {
    std::string mode;
    double a = 0.0;
    double b = 0.0;
    double range = 10.0;
    double step = 0.01;
    std::int64_t window = 32;
    std::optional<double> delay;
    std::optional<std::int64_t> delay_samples;
    std::string out = "-";
};

int run_impulse(const ImpulseArgs& args)
{
    std::string csv = "index_or_time,re,im\n";
    if (args.mode == "analog") {
        if (!(args.range > 0.0) || !(args.step > 0.0))
            throw UsageError("--range and --step must be positive");
        const auto band = BandpassInterval::analog(args.a, args.b);
        const auto points = static_cast<Eigen::Index>(std::llround(2.0 * args.range / args.step)) + 1;
        if (points < 2)
            throw UsageError("grid must hold at least two samples");
        auto h = sample_symmetric([&](double t) { return analog::impulse_response(band, t); },
                                  args.range, points);
        if (args.delay)
            h = ops::truncate_to_delay_analog(h, analog::AnalogDelay{*args.delay});
        for (Eigen::Index i = 0; i < h.size(); ++i)
            csv += format_double(h.time(i)) + ',' + format_double(h.values()[i].real()) + ',' +
                   format_double(h.values()[i].imag()) + '\n';
    } else if (args.mode == "digital") {
        if (args.window < 1)
            throw UsageError("--window must be at least 1");
        const auto band = BandpassInterval::digital(args.a, args.b);
        auto h = digital::ideal_impulse_response(band, args.window);
        if (args.delay_samples)
            h = ops::truncate_to_delay(h, digital::DigitalDelay{*args.delay_samples});
        for (std::int64_t n = h.offset(); n <= h.last_index(); ++n)
            csv += std::to_string(n) + ',' + format_double(h[n].real()) + ',' +
                   format_double(h[n].imag()) + '\n';
    } else {
        throw UsageError("--mode must be analog or digital");
    }
    emit(args.out, csv);
    return exit_ok;
}

int run_verify(const std::string& suite_name, std::uint64_t seed, double tolerance_scale)
{
    const auto suite = parse_suite(suite_name);
    if (!suite)
        throw UsageError("--suite must be all, analog, digital or operators");
    const auto results = run_verification(*suite, seed, tolerance_scale);
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        passed += r.passed ? 1 : 0;
    }
    std::cout << passed << '/' << results.size() << " checks passed (suite " << suite_name
              << ", seed " << seed << ")\n";
    return passed == results.size() ? exit_ok : exit_check_failed;
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("CAUSALGAP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("CAUSALGAP_SEED must be a non-negative integer");
        }
    }
    return 7;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distances and angles between ideal bandpass filters and realizable filters"};
    app.require_subcommand(1);

    AnalogArgs analog_args;
    auto* analog_cmd = app.add_subcommand("analog", "Report for an analog band [a, b] in rad/s");
    analog_cmd->add_option("--a", analog_args.a, "Lower band edge")->required();
    analog_cmd->add_option("--b", analog_args.b, "Upper band edge")->required();
    analog_cmd->add_option("--delay", analog_args.delay, "Delay T >= 0 in seconds");
    analog_cmd->add_option("--quad-tol", analog_args.quad_tol, "Absolute and relative quadrature tolerance");
    analog_cmd->add_option("--max-subdivisions", analog_args.max_subdivisions, "Quadrature subdivision budget");
    analog_cmd->add_option("--format", analog_args.format, "text, json or csv");

    DigitalArgs digital_args;
    auto* digital_cmd = app.add_subcommand("digital", "Report for a digital band 0 < a < b < 2pi");
    digital_cmd->add_option("--a", digital_args.a, "Lower band edge")->required();
    digital_cmd->add_option("--b", digital_args.b, "Upper band edge")->required();
    digital_cmd->add_option("--delay-samples", digital_args.delay_samples, "Delay N >= 0 in samples");
    digital_cmd->add_option("--coeffs", digital_args.coeffs, "Print c_{-K}..c_K as CSV instead");
    digital_cmd->add_option("--format", digital_args.format, "text, json or csv");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate reports along bandwidth or delay");
    sweep_cmd->add_option("--mode", sweep_args.mode, "analog or digital")->required();
    sweep_cmd->add_option("--vary", sweep_args.vary, "bandwidth or delay")->required();
    sweep_cmd->add_option("--from", sweep_args.from, "First parameter value")->required();
    sweep_cmd->add_option("--to", sweep_args.to, "Last parameter value")->required();
    sweep_cmd->add_option("--steps", sweep_args.steps, "Number of rows (>= 2)")->required();
    sweep_cmd->add_option("--a", sweep_args.a, "Lower edge (delay sweeps; analog bandwidth sweeps)");
    sweep_cmd->add_option("--b", sweep_args.b, "Upper edge (delay sweeps)");
    sweep_cmd->add_option("--center", sweep_args.center, "Band center for digital bandwidth sweeps");
    sweep_cmd->add_option("--delay", sweep_args.delay, "Fixed analog delay T");
    sweep_cmd->add_option("--delay-samples", sweep_args.delay_samples, "Fixed digital delay N");
    sweep_cmd->add_option("--quad-tol", sweep_args.quad_tol, "Quadrature tolerance");
    sweep_cmd->add_option("--out", sweep_args.out, "Output CSV path ('-' for stdout)")->required();

    ImpulseArgs impulse_args;
    auto* impulse_cmd = app.add_subcommand("impulse", "Sample the ideal impulse response as CSV");
    impulse_cmd->add_option("--mode", impulse_args.mode, "analog or digital")->required();
    impulse_cmd->add_option("--a", impulse_args.a, "Lower band edge")->required();
    impulse_cmd->add_option("--b", impulse_args.b, "Upper band edge")->required();
    impulse_cmd->add_option("--range", impulse_args.range, "Analog grid radius R (grid is [-R, R])");
    impulse_cmd->add_option("--step", impulse_args.step, "Analog grid spacing");
    impulse_cmd->add_option("--window", impulse_args.window, "Digital index window K (n in [-K, K])");
    impulse_cmd->add_option("--delay", impulse_args.delay, "Zero samples with t < -T");
    impulse_cmd->add_option("--delay-samples", impulse_args.delay_samples, "Zero entries with n < -N");
    impulse_cmd->add_option("--out", impulse_args.out, "Output CSV path ('-' for stdout)");

    std::string suite = "all";
    std::optional<std::uint64_t> seed;
    auto* verify_cmd = app.add_subcommand("verify", "Run the oracle cross-checks");
    verify_cmd->add_option("--suite", suite, "all, analog, digital or operators");
    verify_cmd->add_option("--seed", seed, "RNG seed (default $CAUSALGAP_SEED or 7)");
    double tolerance_scale = 1.0;
    verify_cmd->add_option("--tolerance-scale", tolerance_scale, "Multiply every check limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (analog_cmd->parsed())
            return run_analog(analog_args);
        if (digital_cmd->parsed())
            return run_digital(digital_args);
        if (sweep_cmd->parsed())
            return run_sweep(sweep_args);
        if (impulse_cmd->parsed())
            return run_impulse(impulse_args);
        if (verify_cmd->parsed())
            return run_verify(suite, seed ? *seed : default_seed(), tolerance_scale);
    } catch (const UnwritableOutput& e) {
        std::cerr << "causalgap: " << e.what() << '\n';
        return exit_unwritable;
    } catch (const UsageError& e) {
        std::cerr << "causalgap: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& e) {
        std::cerr << "causalgap: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "causalgap: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "causalgap: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
