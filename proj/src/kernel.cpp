#include "causalgap/kernel.hpp"

#include <complex>
#include <limits>
#include <string>

namespace causalgap {

namespace {

constexpr double pi = std::numbers::pi;

// Trigamma at x >= 1: psi'(x) = sum_{k>=0} 1/(x+k)^2.
double trigamma(double x)
{
    double shifted = 0.0;
    while (x < 10.0) {
        shifted += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / x;
    const double r2 = r * r;
    const double series =
        r + 0.5 * r2 + r * r2 * (1.0 / 6.0 - r2 * (1.0 / 30.0 - r2 * (1.0 / 42.0 - r2 / 30.0)));
    return shifted + series;
}

double sine_integral_series(double x)
{
    const double x2 = x * x;
    double sum = 0.0;
    double term = x;
    for (int n = 0; n < 64; ++n) {
        const double contribution = term / (2 * n + 1);
        sum += contribution;
        if (std::abs(contribution) <= 1e-17 * std::abs(sum))
            break;
        term *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return sum;
}

// Modified Lentz evaluation of the continued fraction for E1(ix);
// Si(x) = pi/2 + Im E1(ix) for x > 0.
double sine_integral_continued_fraction(double x)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::complex<double> b{1.0, x};
    std::complex<double> c{1.0 / tiny, 0.0};
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 2; i < 100000; ++i) {
        const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
            break;
    }
    h *= std::complex<double>{std::cos(x), -std::sin(x)};
    return 0.5 * pi + h.imag();
}

} // namespace

BandpassInterval::BandpassInterval(double a, double b, Mode mode) : a_(a), b_(b), mode_(mode)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw InvalidArgument("band edges must be finite");
    if (!(a < b))
        throw InvalidArgument("band requires a < b, got a=" + std::to_string(a) +
                              " b=" + std::to_string(b));
    if (mode == Mode::Digital && !(a > 0.0 && b < 2.0 * pi))
        throw InvalidArgument("digital band requires 0 < a < b < 2*pi");
}

void QuadratureConfig::validate() const
{
    if (!(abs_tolerance > 0.0) || !(rel_tolerance > 0.0))
        throw InvalidArgument("quadrature tolerances must be positive");
    if (max_subdivisions < 1)
        throw InvalidArgument("max_subdivisions must be at least 1");
}

void SeriesConfig::validate() const
{
    if (!(tail_bound_target > 0.0))
        throw InvalidArgument("tail_bound_target must be positive");
    if (max_terms < 1)
        throw InvalidArgument("max_terms must be at least 1");
}

double sine_integral(double x)
{
    const double ax = std::abs(x);
    double value;
    if (ax == 0.0)
        value = 0.0;
    else if (ax <= 4.0)
        value = sine_integral_series(ax);
    else if (std::isinf(ax))
        value = 0.5 * pi;
    else
        value = sine_integral_continued_fraction(ax);
    return x < 0.0 ? -value : value;
}

double kernel_half_integral(double c, double T)
{
    if (T == 0.0)
        return 0.0;
    const double x = c * T;
    if (x < 1e-3) {
        const double x2 = x * x;
        return c * c * T / (2.0 * pi) * (1.0 - x2 / 36.0 + x2 * x2 / 1800.0);
    }
    const double s = std::sin(0.5 * x);
    return (c * sine_integral(x) - 2.0 * s * s / T) / pi;
}

QuadratureResult kernel_mass(double c, double radius, const QuadratureConfig& cfg)
{
    if (!(c > 0.0) || !(radius > 0.0))
        throw InvalidArgument("kernel_mass: need c > 0 and radius > 0");
    // The kernel is even; integrate one side and double.
    QuadratureConfig half = cfg;
    half.abs_tolerance = 0.5 * cfg.abs_tolerance;
    auto result = integrate_adaptive([c](double t) { return oscillatory_kernel(c, t); }, 0.0, radius,
                                     half);
    result.value *= 2.0;
    result.error_estimate = 2.0 * result.error_estimate + 4.0 / (pi * radius);
    return result;
}

TailSum coefficient_tail_sum(double c, std::int64_t from_index, const SeriesConfig& cfg)
{
    cfg.validate();
    if (!(c > 0.0 && c < 2.0 * pi))
        throw InvalidArgument("coefficient_tail_sum: need 0 < c < 2*pi");
    if (from_index < 1)
        throw InvalidArgument("coefficient_tail_sum: from_index must be >= 1");

    const double s = std::abs(std::sin(0.5 * c));
    const double target = cfg.tail_bound_target;
    auto bound = [s](double K) { return std::min(1.0 / K, 1.0 / (s * (K + 1.0) * (K + 1.0))) / pi; };

    // Smallest K satisfying each of the two bounds, then the cheaper one.
    const double k_harmonic = std::ceil(1.0 / (pi * target));
    const double k_abel = std::max(1.0, std::ceil(std::sqrt(1.0 / (pi * s * target))) - 1.0);
    double last = std::min(k_harmonic, k_abel);
    while (last > 1.0 && bound(last - 1.0) <= target)
        last -= 1.0;
    while (bound(last) > target)
        last += 1.0;
    last = std::max(last, static_cast<double>(from_index - 1));
    last = std::max(last, 1.0);

    const double terms = last - static_cast<double>(from_index) + 1.0;
    if (terms > static_cast<double>(cfg.max_terms))
        throw BudgetExceeded("coefficient_tail_sum: " + std::to_string(terms) +
                             " terms needed, budget is " + std::to_string(cfg.max_terms));

    TailSum out;
    out.last_index = static_cast<std::int64_t>(last);
    out.terms = terms > 0.0 ? static_cast<std::size_t>(terms) : 0;

    // Neumaier summation, smallest terms first.
    double sum = 0.0;
    double compensation = 0.0;
    for (std::int64_t k = out.last_index; k >= from_index; --k) {
        const double kd = static_cast<double>(k);
        const double sk = std::sin(0.5 * kd * c);
        const double term = 2.0 * sk * sk / (kd * kd * pi);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            compensation += (sum - t) + term;
        else
            compensation += (term - t) + sum;
        sum = t;
    }
    out.value = sum + compensation + trigamma(last + 1.0) / pi;
    out.tail_bound = bound(last);
    return out;
}

} // namespace causalgap
