#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "causalgap/kernel.hpp"

namespace causalgap {

enum class Subspace { Causal, Delayed, Memoryless };
enum class Method { ClosedForm, Quadrature, SeriesSum };

/// Distance and angle between a filter and a realizable-filter subspace.
///
/// angle = arcsin(distance / kernel_norm); a zero filter (kernel_norm == 0)
/// is reported with angle 0 by convention.
struct ApproximationReport {
    Mode domain = Mode::Analog;
    Subspace subspace = Subspace::Causal;
    // Delay T in seconds (analog) or N in samples (digital); 0 when causal.
    double delay = 0.0;
    double kernel_norm = 0.0;
    double distance = 0.0;
    double angle = 0.0;
    Method method = Method::ClosedForm;
    double error_estimate = 0.0;
    // False when a quadrature ran out of subdivisions.
    bool converged = true;
    // Independent second evaluation of the distance, where one exists.
    std::optional<double> cross_check_distance;
};

double angle_from_ratio(double distance, double kernel_norm);

std::string_view to_string(Mode mode);
std::string_view to_string(Subspace subspace);
std::string_view to_string(Method method);

} // namespace causalgap
