#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "causalgap/digital.hpp"

using namespace causalgap;
using namespace causalgap::digital;

namespace {

constexpr double pi = std::numbers::pi;

BandpassInterval centered(double width)
{
    return BandpassInterval::digital(pi - 0.5 * width, pi + 0.5 * width);
}

} // namespace

TEST_CASE("Fourier coefficient examples")
{
    const auto band = BandpassInterval::digital(pi / 2.0, 3.0 * pi / 2.0);
    CHECK(fourier_coefficient(band, 0) == Complex(0.5, 0.0));
    CHECK(std::abs(std::abs(fourier_coefficient(band, 1)) - 1.0 / pi) < 1e-16);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> edge(1e-3, 2.0 * pi - 1e-3);
    for (int i = 0; i < 100; ++i) {
        double a = edge(rng);
        double b = edge(rng);
        if (a > b)
            std::swap(a, b);
        const auto random_band = BandpassInterval::digital(a, b);
        for (std::int64_t k = 1; k < 40; ++k) {
            const double plus = std::abs(fourier_coefficient(random_band, k));
            const double minus = std::abs(fourier_coefficient(random_band, -k));
            CHECK(std::abs(plus - minus) < 1e-15);
            // Magnitude against 2 pi |c_k|^2 = (1 - cos(k c)) / (k^2 pi).
            const double c = b - a;
            const double kd = static_cast<double>(k);
            CHECK(std::abs(2.0 * pi * plus * plus - (1.0 - std::cos(kd * c)) / (kd * kd * pi)) < 1e-14);
        }
    }
}

TEST_CASE("analog bands are rejected")
{
    CHECK_THROWS_AS(fourier_coefficient(BandpassInterval::analog(0.5, 1.0), 1), InvalidArgument);
    CHECK_THROWS_AS(DigitalDelay{-1}, InvalidArgument);
    CHECK_THROWS_AS(FourierCoefficientTable(centered(1.0), -1), InvalidArgument);
    CHECK_THROWS_AS(FourierCoefficientTable(centered(1.0), 3).at(4), InvalidArgument);
}

TEST_CASE("Parseval")
{
    const std::int64_t K = 100'000;
    for (double width : {0.1, 1.0, pi, 5.0, 6.2}) {
        CAPTURE(width);
        const FourierCoefficientTable table(centered(width), K);
        const double defect = width - table.parseval_sum();
        CHECK(defect >= -1e-10);
        CHECK(defect <= 4.0 / (static_cast<double>(K) * pi) + 1e-10);
    }
    // Partial sums increase with K.
    double previous = 0.0;
    for (std::int64_t K2 : {0, 1, 2, 10, 100}) {
        const double s = FourierCoefficientTable(centered(1.0), K2).parseval_sum();
        CHECK(s > previous);
        previous = s;
    }
}

TEST_CASE("causal report closed form")
{
    const auto r = causal_report(centered(pi));
    CHECK(std::abs(r.distance - 1.0 / (2.0 * std::sqrt(2.0))) <= 1e-15);
    CHECK(std::abs(r.angle - pi / 6.0) <= 1e-15);
    CHECK(r.method == Method::ClosedForm);
    CHECK(r.subspace == Subspace::Causal);

    const auto full = causal_report(BandpassInterval::digital(1e-9, 2.0 * pi - 1e-9));
    CHECK(full.angle < 1e-4);
    CHECK(full.distance < 1e-4);

    const auto narrow = causal_report(centered(1e-9));
    CHECK(std::abs(narrow.angle - pi / 4.0) < 1e-9);
}

TEST_CASE("delayed report examples")
{
    const auto band = centered(pi);
    const auto zero = delayed_report(band, DigitalDelay{0});
    const auto causal = causal_report(band);
    CHECK(zero.distance == causal.distance);
    CHECK(zero.angle == causal.angle);

    const auto one = delayed_report(band, DigitalDelay{1});
    CHECK(std::abs(one.distance - 0.15387922653062117779) < 1e-15);
    CHECK(std::abs(std::sin(one.angle) * std::sin(one.angle) - (0.25 - 2.0 / (pi * pi))) < 1e-15);
    CHECK(one.subspace == Subspace::Delayed);
    CHECK(one.delay == 1.0);
}

TEST_CASE("closed form against the coefficient tail sum")
{
    for (double width : {0.1, 1.0, pi, 5.0, 6.2})
        for (std::int64_t N : {0, 1, 2, 5, 20, 100}) {
            CAPTURE(width);
            CAPTURE(N);
            const auto r = delayed_report(centered(width), DigitalDelay{N});
            const TailSum tail = coefficient_tail_sum(width, N + 1);
            CHECK(std::abs(2.0 * pi * r.distance * r.distance - tail.value) < 1e-9);
        }
}

TEST_CASE("angle stays strictly inside (0, pi/4) and decreases in N")
{
    for (double width : {1e-3, 0.1, 1.0, 2.0, pi, 4.0, 6.2, 2.0 * pi - 1e-3}) {
        CAPTURE(width);
        double previous = pi / 4.0;
        for (std::int64_t N = 0; N <= 200; ++N) {
            const auto r = delayed_report(centered(width), DigitalDelay{N});
            CHECK(r.angle > 1e-12);
            CHECK(r.angle < pi / 4.0 - 1e-12);
            CHECK(std::abs(r.distance - r.kernel_norm * std::sin(r.angle)) <= 1e-12);
            if (N > 0) {
                const double s = std::sin(0.5 * static_cast<double>(N) * width);
                if (2.0 * s * s > 1e-12)
                    CHECK(r.angle < previous);
                else
                    CHECK(r.angle <= previous);
            }
            previous = r.angle;
        }
    }
}

TEST_CASE("equality case: even terms vanish when the width is pi")
{
    const auto band = centered(pi);
    for (std::int64_t N = 1; N < 50; N += 2) {
        CAPTURE(N);
        const auto odd = delayed_report(band, DigitalDelay{N});
        const auto even = delayed_report(band, DigitalDelay{N + 1});
        CHECK(even.angle == odd.angle);
        CHECK(delayed_report(band, DigitalDelay{N - 1}).angle > odd.angle);
    }
}

TEST_CASE("reports depend only on the width")
{
    const auto lhs = BandpassInterval::digital(1.0, 2.5);
    const auto rhs = BandpassInterval::digital(1.5, 3.0);
    REQUIRE(lhs.bandwidth() == rhs.bandwidth());
    for (std::int64_t N : {0, 3, 40}) {
        const auto l = delayed_report(lhs, DigitalDelay{N});
        const auto r = delayed_report(rhs, DigitalDelay{N});
        CHECK(l.distance == r.distance);
        CHECK(l.angle == r.angle);
        CHECK(l.kernel_norm == r.kernel_norm);
    }
}

TEST_CASE("impulse response and best approximant")
{
    const auto band = centered(pi);
    const auto h = ideal_impulse_response(band, 8);
    CHECK(h.offset() == -8);
    CHECK(h.size() == 17);
    for (std::int64_t n = -8; n <= 8; ++n)
        CHECK(h[n] == fourier_coefficient(band, -n));

    const auto best = best_causal_coefficients(band, DigitalDelay{0}, 8);
    CHECK(best.offset() == 0);
    CHECK(best[0] == Complex(0.5, 0.0));
    CHECK(best[-1] == Complex(0.0, 0.0));
    for (std::int64_t n = 1; n <= 8; ++n)
        CHECK(std::abs(std::abs(best[n]) - std::abs(fourier_coefficient(band, n))) < 1e-16);

    const auto delayed = best_causal_coefficients(band, DigitalDelay{3}, 8);
    CHECK(delayed.offset() == -3);
    CHECK(delayed[-4] == Complex(0.0, 0.0));
    CHECK(delayed[-3] == fourier_coefficient(band, 3));
    CHECK_THROWS_AS(best_causal_coefficients(band, DigitalDelay{9}, 8), InvalidArgument);

    // Nearly the full band: identity filter.
    const auto identity = best_causal_coefficients(BandpassInterval::digital(1e-9, 2.0 * pi - 1e-9),
                                                   DigitalDelay{0}, 16);
    CHECK(std::abs(identity[0] - 1.0) < 1e-9);
    for (std::int64_t n = 1; n <= 16; ++n)
        CHECK(std::abs(identity[n]) < 1e-9);
}

TEST_CASE("residual of the best approximant tends to the causal distance")
{
    for (double width : {0.5, pi, 5.0}) {
        const auto band = centered(width);
        const std::int64_t K = 200'000;
        const FourierCoefficientTable table(band, K);
        // ||chi - H||^2 = 2 pi sum_{k<0} |c_k|^2; divided by 2 pi for the distance.
        double squared = 0.0;
        for (std::int64_t k = K; k >= 1; --k)
            squared += std::norm(table.at(-k));
        const double distance = std::sqrt(squared);
        CHECK(std::abs(distance - causal_report(band).distance) < 1e-5);
    }
}

TEST_CASE("c0 ratio angle")
{
    CHECK(c0_ratio_angle(0.0) == pi / 4.0);
    CHECK(c0_ratio_angle(1.0) == 0.0);
    CHECK_THROWS_AS(c0_ratio_angle(-1e-9), DomainError);
    CHECK_THROWS_AS(c0_ratio_angle(1.0 + 1e-9), DomainError);
    CHECK_THROWS_AS(c0_ratio_angle(std::nan("")), DomainError);
    for (double width : {0.1, 1.0, pi, 5.0, 6.2}) {
        const double C = std::sqrt(width / (2.0 * pi));
        CHECK(std::abs(c0_ratio_angle(C) - causal_report(centered(width)).angle) < 1e-12);
    }
}
