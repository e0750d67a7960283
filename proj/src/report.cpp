#include "causalgap/report.hpp"

#include <algorithm>
#include <cmath>

namespace causalgap {

double angle_from_ratio(double distance, double kernel_norm)
{
    if (kernel_norm == 0.0)
        return 0.0;
    return std::asin(std::clamp(distance / kernel_norm, 0.0, 1.0));
}

std::string_view to_string(Mode mode)
{
    return mode == Mode::Analog ? "analog" : "digital";
}

std::string_view to_string(Subspace subspace)
{
    switch (subspace) {
    case Subspace::Causal:
        return "causal";
    case Subspace::Delayed:
        return "delayed";
    case Subspace::Memoryless:
        return "memoryless";
    }
    return "unknown";
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::ClosedForm:
        return "closed_form";
    case Method::Quadrature:
        return "quadrature";
    case Method::SeriesSum:
        return "series_sum";
    }
    return "unknown";
}

} // namespace causalgap
