#include "causalgap/signal.hpp"

#include <cmath>
#include <utility>

#include "causalgap/errors.hpp"

namespace causalgap {

SampledSignal::SampledSignal(double t0, double dt, ComplexVector values)
    : t0_(t0), dt_(dt), values_(std::move(values))
{
    if (!std::isfinite(t0) || !(dt > 0.0) || !std::isfinite(dt))
        throw InvalidArgument("sampled signal needs finite t0 and dt > 0");
    if (values_.size() < 1)
        throw InvalidArgument("sampled signal needs at least one sample");
    if (!values_.allFinite())
        throw InvalidArgument("sampled signal has non-finite samples");
}

DigitalSequence::DigitalSequence(std::int64_t offset, ComplexVector values)
    : offset_(offset), values_(std::move(values))
{
    if (values_.size() < 1)
        throw InvalidArgument("digital sequence needs at least one sample");
}

DigitalSequence shift(const DigitalSequence& x, std::int64_t m)
{
    return {x.offset() + m, x.values()};
}

DigitalSequence conj_reflect(const DigitalSequence& x)
{
    return {-x.last_index(), x.values().reverse().conjugate()};
}

} // namespace causalgap
