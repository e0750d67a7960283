#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace causalgap {

enum class VerifySuite { All, Analog, Digital, Operators };

std::optional<VerifySuite> parse_suite(std::string_view name);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs the invariant matrices of the selected modules. The output depends
/// only on (suite, seed, tolerance_scale); every check limit is multiplied
/// by tolerance_scale.
std::vector<CheckResult> run_verification(VerifySuite suite, std::uint64_t seed,
                                          double tolerance_scale = 1.0);

} // namespace causalgap
