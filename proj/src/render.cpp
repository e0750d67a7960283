#include "causalgap/render.hpp"

#include <charconv>
#include <numbers>
#include <sstream>

namespace causalgap {

std::optional<OutputFormat> parse_format(std::string_view name)
{
    if (name == "text")
        return OutputFormat::Text;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    return std::nullopt;
}

std::string format_double(double value)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                      std::chars_format::general, 17);
    return {buffer, result.ptr};
}

std::string format_scientific(double value, int digits)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                      std::chars_format::scientific, digits);
    return {buffer, result.ptr};
}

nlohmann::json report_to_json(const BandpassInterval& band, const ApproximationReport& report)
{
    nlohmann::json j;
    j["schema"] = report_schema_version;
    j["domain"] = to_string(report.domain);
    j["band"] = {{"a", band.lower()}, {"b", band.upper()}};
    j["subspace"] = to_string(report.subspace);
    if (report.domain == Mode::Digital)
        j["delay"] = static_cast<std::int64_t>(report.delay);
    else
        j["delay"] = report.delay;
    j["kernel_norm"] = report.kernel_norm;
    j["distance"] = report.distance;
    j["angle"] = report.angle;
    j["angle_degrees"] = report.angle * 180.0 / std::numbers::pi;
    j["method"] = to_string(report.method);
    j["error_estimate"] = report.error_estimate;
    j["converged"] = report.converged;
    if (report.cross_check_distance)
        j["cross_check_distance"] = *report.cross_check_distance;
    return j;
}

std::string render_report(const BandpassInterval& band, const ApproximationReport& report,
                          OutputFormat format)
{
    std::ostringstream out;
    const std::string delay = report.domain == Mode::Digital
                                  ? std::to_string(static_cast<std::int64_t>(report.delay))
                                  : format_double(report.delay);
    switch (format) {
    case OutputFormat::Json:
        out << report_to_json(band, report).dump(2) << '\n';
        break;
    case OutputFormat::Csv:
        out << "domain,a,b,subspace,delay,kernel_norm,distance,angle,angle_degrees,method,"
               "error_estimate,converged\n";
        out << to_string(report.domain) << ',' << format_double(band.lower()) << ','
            << format_double(band.upper()) << ',' << to_string(report.subspace) << ',' << delay
            << ',' << format_double(report.kernel_norm) << ',' << format_double(report.distance)
            << ',' << format_double(report.angle) << ','
            << format_double(report.angle * 180.0 / std::numbers::pi) << ','
            << to_string(report.method) << ',' << format_double(report.error_estimate) << ','
            << (report.converged ? "true" : "false") << '\n';
        break;
    case OutputFormat::Text:
        out << "domain          " << to_string(report.domain) << '\n'
            << "band            [" << format_double(band.lower()) << ", "
            << format_double(band.upper()) << "]\n"
            << "subspace        " << to_string(report.subspace) << '\n'
            << "delay           " << delay << '\n'
            << "kernel norm     " << format_double(report.kernel_norm) << '\n'
            << "distance        " << format_double(report.distance) << '\n'
            << "angle (rad)     " << format_double(report.angle) << '\n'
            << "angle (deg)     " << format_double(report.angle * 180.0 / std::numbers::pi) << '\n'
            << "method          " << to_string(report.method) << '\n'
            << "error estimate  " << format_double(report.error_estimate) << '\n';
        if (report.cross_check_distance)
            out << "cross-check     " << format_double(*report.cross_check_distance) << '\n';
        if (!report.converged)
            out << "WARNING: quadrature hit its subdivision limit\n";
        break;
    }
    return out.str();
}

std::string sweep_csv_row(double param, const ApproximationReport& report)
{
    return format_double(param) + ',' + format_double(report.distance) + ',' +
           format_double(report.angle) + ',' + format_double(report.kernel_norm) + ',' +
           std::string(to_string(report.method)) + ',' + format_double(report.error_estimate);
}

} // namespace causalgap
