#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace causalgap {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// Uniformly sampled complex signal x(t0 + i*dt), i = 0..size()-1.
class SampledSignal {
public:
    SampledSignal(double t0, double dt, ComplexVector values);

    double start() const { return t0_; }
    double step() const { return dt_; }
    Eigen::Index size() const { return values_.size(); }
    double time(Eigen::Index i) const { return t0_ + static_cast<double>(i) * dt_; }
    const ComplexVector& values() const { return values_; }

    /// Riemann-sum energy dt * sum |x_i|^2.
    double energy() const { return dt_ * values_.squaredNorm(); }
    double norm() const { return std::sqrt(energy()); }

private:
    double t0_;
    double dt_;
    ComplexVector values_;
};

/// Finitely supported sequence; values()[i] is the sample at index offset + i
/// and every index outside the stored window is zero.
class DigitalSequence {
public:
    DigitalSequence(std::int64_t offset, ComplexVector values);

    std::int64_t offset() const { return offset_; }
    std::int64_t last_index() const { return offset_ + values_.size() - 1; }
    Eigen::Index size() const { return values_.size(); }
    const ComplexVector& values() const { return values_; }

    Complex operator[](std::int64_t n) const
    {
        if (n < offset_ || n > last_index())
            return {0.0, 0.0};
        return values_[static_cast<Eigen::Index>(n - offset_)];
    }

    double squared_norm() const { return values_.squaredNorm(); }
    double norm() const { return values_.norm(); }

private:
    std::int64_t offset_;
    ComplexVector values_;
};

/// Samples f on the symmetric grid [-radius, radius] with `points` samples,
/// so t = 0 is a grid point whenever `points` is odd.
template <typename F>
SampledSignal sample_symmetric(F&& f, double radius, Eigen::Index points)
{
    const double dt = 2.0 * radius / static_cast<double>(points - 1);
    const Eigen::Index mid = (points - 1) / 2;
    ComplexVector values(points);
    for (Eigen::Index i = 0; i < points; ++i)
        values[i] = f(static_cast<double>(i - mid) * dt);
    return SampledSignal(-static_cast<double>(mid) * dt, dt, std::move(values));
}

DigitalSequence shift(const DigitalSequence& x, std::int64_t m);

/// x[n] -> conj(x[-n]); the matched-filter input for kernel x.
DigitalSequence conj_reflect(const DigitalSequence& x);

} // namespace causalgap
