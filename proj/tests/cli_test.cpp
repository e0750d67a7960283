#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "causalgap/kernel.hpp"

namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Run run(const std::string& args, const std::string& env = "")
{
    const fs::path err_file = fs::temp_directory_path() / "causalgap_cli_test.stderr";
    const std::string command =
        env + " '" CAUSALGAP_BINARY "' " + args + " 2>'" + err_file.string() + "'";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_file)};
}

// Set CAUSALGAP_UPDATE_GOLDEN=1 to rewrite the files from the current build.
void check_golden(const std::string& name, const std::string& actual)
{
    const fs::path path = fs::path(CAUSALGAP_GOLDEN_DIR) / name;
    if (std::getenv("CAUSALGAP_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << actual;
        return;
    }
    REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
    CHECK(actual == slurp(path));
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            fields.push_back(cell);
        rows.push_back(fields);
    }
    return rows;
}

fs::path scratch(const std::string& name)
{
    return fs::temp_directory_path() / ("causalgap_cli_test_" + name);
}

} // namespace

TEST_CASE("analog subcommand")
{
    const auto causal = run("analog --a 0 --b 2 --format json");
    CHECK(causal.exit_code == 0);
    check_golden("analog_causal.json", causal.out);
    const auto j = nlohmann::json::parse(causal.out);
    CHECK(j["distance"].get<double>() == 1.0);
    CHECK(j["angle"].get<double>() == 0.7853981633974483);

    auto zero = nlohmann::json::parse(run("analog --a 0 --b 2 --delay 0 --format json").out);
    CHECK(zero["method"] == "quadrature");
    zero["method"] = j["method"];
    CHECK(zero == j);

    const auto text = run("analog --a -1 --b 3 --delay 2.5");
    CHECK(text.exit_code == 0);
    check_golden("analog_delay.txt", text.out);

    const auto csv = run("analog --a -1 --b 3 --delay 2.5 --format csv");
    CHECK(csv.exit_code == 0);
    check_golden("analog_delay.csv", csv.out);

    const auto bad = run("analog --a 2 --b 0");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    CHECK(run("analog --a 0 --b 2 --delay -1").exit_code == 2);
    CHECK(run("analog --a 0 --b 2 --format yaml").exit_code == 2);
    CHECK(run("analog --a 0").exit_code == 2);
    CHECK(run("analog --a 0 --b 2 --delay 1 --quad-tol 0").exit_code == 2);
}

TEST_CASE("subdivision limit exits 3 and still prints the report")
{
    const auto r = run("analog --a 0 --b 2000 --delay 50 --max-subdivisions 3 --format json");
    CHECK(r.exit_code == 3);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["converged"] == false);
    CHECK(std::isfinite(j["distance"].get<double>()));
    CHECK(r.err.find("subdivision") != std::string::npos);
}

TEST_CASE("digital subcommand")
{
    const auto r = run("digital --a 1.5707963267948966 --b 4.71238898038469 --format json");
    CHECK(r.exit_code == 0);
    check_golden("digital_pi.json", r.out);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["angle"].get<double>() - pi / 6.0) <= 1e-15);
    CHECK(j["delay"] == 0);

    const auto causal = nlohmann::json::parse(run("digital --a 0.1 --b 6.2 --format json").out);
    const auto delayed =
        nlohmann::json::parse(run("digital --a 0.1 --b 6.2 --delay-samples 3 --format json").out);
    CHECK(delayed["distance"].get<double>() < causal["distance"].get<double>());
    CHECK(delayed["subspace"] == "delayed");

    const auto coeffs = run("digital --a 1 --b 2 --coeffs 3");
    CHECK(coeffs.exit_code == 0);
    check_golden("digital_coeffs.csv", coeffs.out);
    const auto rows = parse_csv(coeffs.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == std::vector<std::string>{"k", "re", "im"});
    CHECK(rows[1][0] == "-3");
    CHECK(rows[7][0] == "3");

    CHECK(run("digital --a 0 --b 1").exit_code == 2);
    CHECK(run("digital --a 1 --b 7").exit_code == 2);
    CHECK(run("digital --a 1 --b 2 --delay-samples -1").exit_code == 2);
    CHECK(run("digital --a 1 --b 2 --coeffs -1").exit_code == 2);
}

TEST_CASE("sweep subcommand")
{
    SUBCASE("digital bandwidth: angle falls from pi/4 to 0")
    {
        const auto r = run("sweep --mode digital --vary bandwidth --from 1e-6 --to 6.283184307179586 "
                           "--steps 100 --out -");
        CHECK(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 101);
        CHECK(r.out.substr(0, r.out.find('\n')) == "param,distance,angle,kernel_norm,method,error_estimate");
        CHECK(std::abs(std::stod(rows[1][2]) - pi / 4.0) < 1e-3);
        CHECK(std::stod(rows[100][2]) < 1e-3);
        for (std::size_t i = 2; i < rows.size(); ++i)
            CHECK(std::stod(rows[i][2]) < std::stod(rows[i - 1][2]));
    }
    SUBCASE("digital delay: nonincreasing, flat on the vanishing terms")
    {
        const fs::path out = scratch("digital_delay.csv");
        const auto r = run("sweep --mode digital --vary delay --from 0 --to 50 --steps 51 "
                           "--a 1.5707963267948966 --b 4.71238898038469 --out '" + out.string() + "'");
        CHECK(r.exit_code == 0);
        CHECK(r.out.empty());
        const std::string text = slurp(out);
        check_golden("sweep_digital_delay.csv", text);
        const auto rows = parse_csv(text);
        REQUIRE(rows.size() == 52);
        for (std::size_t i = 2; i < rows.size(); ++i) {
            const double N = std::stod(rows[i][0]);
            const double previous = std::stod(rows[i - 1][2]);
            const double current = std::stod(rows[i][2]);
            if (static_cast<long>(N) % 2 == 0)
                CHECK(current == previous);
            else
                CHECK(current < previous);
        }
        fs::remove(out);
    }
    SUBCASE("analog delay: distance starts at 1 and decreases")
    {
        const auto r = run("sweep --mode analog --vary delay --from 0 --to 100 --steps 21 --a 0 --b 2 --out -");
        CHECK(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 22);
        CHECK(std::abs(std::stod(rows[1][1]) - 1.0) < 1e-12);
        for (std::size_t i = 2; i < rows.size(); ++i)
            CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
    }
    SUBCASE("errors")
    {
        CHECK(run("sweep --mode digital --vary bandwidth --from 0.1 --to 1 --steps 5 "
                  "--out /nonexistent-dir/sweep.csv").exit_code == 4);
        CHECK(run("sweep --mode digital --vary bandwidth --from 0.1 --to 1 --steps 1 --out -").exit_code == 2);
        CHECK(run("sweep --mode other --vary bandwidth --from 0.1 --to 1 --steps 5 --out -").exit_code == 2);
        CHECK(run("sweep --mode analog --vary delay --from 0 --to 1 --steps 5 --out -").exit_code == 2);
        CHECK(run("sweep --mode digital --vary bandwidth --from 0.1 --to 1 --steps 5").exit_code == 2);
    }
}

TEST_CASE("impulse subcommand")
{
    SUBCASE("analog samples reproduce the kernel")
    {
        const auto r = run("impulse --mode analog --a 0 --b 2 --range 10 --step 0.01");
        CHECK(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 2002);
        CHECK(rows[0] == std::vector<std::string>{"index_or_time", "re", "im"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double t = std::stod(rows[i][0]);
            const double re = std::stod(rows[i][1]);
            const double im = std::stod(rows[i][2]);
            CHECK(std::abs(re * re + im * im - causalgap::oscillatory_kernel(2.0, t)) < 1e-14);
        }
    }
    SUBCASE("digital window with delay 0 is causal")
    {
        const auto r = run("impulse --mode digital --a 1.5707963267948966 --b 4.71238898038469 "
                           "--window 32 --delay-samples 0");
        CHECK(r.exit_code == 0);
        const auto rows = parse_csv(r.out);
        REQUIRE(rows.size() == 66);
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (std::stol(rows[i][0]) < 0) {
                CHECK(rows[i][1] == "0");
                CHECK(rows[i][2] == "0");
            }
    }
    SUBCASE("golden")
    {
        const fs::path out = scratch("impulse.csv");
        const auto r = run("impulse --mode digital --a 1 --b 2.5 --window 4 --delay-samples 1 --out '" +
                           out.string() + "'");
        CHECK(r.exit_code == 0);
        check_golden("impulse_digital.csv", slurp(out));
        fs::remove(out);

        const auto analog = run("impulse --mode analog --a 0 --b 2 --range 1 --step 0.25 --delay 0.5");
        CHECK(analog.exit_code == 0);
        check_golden("impulse_analog.csv", analog.out);
    }
    SUBCASE("errors")
    {
        CHECK(run("impulse --mode digital --a 1 --b 2 --window 0").exit_code == 2);
        CHECK(run("impulse --mode analog --a 0 --b 2 --step 0").exit_code == 2);
        CHECK(run("impulse --mode analog --a 0 --b 2 --out /nonexistent-dir/h.csv").exit_code == 4);
    }
}

TEST_CASE("verify subcommand")
{
    const auto all = run("verify --suite all --seed 7");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);

    const auto ops = run("verify --suite operators --seed 7");
    CHECK(ops.exit_code == 0);
    check_golden("verify_operators.txt", ops.out);
    CHECK(run("verify --suite operators --seed 7").out == ops.out);
    CHECK(run("verify --suite operators", "CAUSALGAP_SEED=7").out == ops.out);
    CHECK(run("verify --suite operators --seed 8").out != ops.out);

    const auto failing = run("verify --suite digital --tolerance-scale 0");
    CHECK(failing.exit_code == 1);
    CHECK(failing.out.find("FAIL digital.") != std::string::npos);

    CHECK(run("verify --suite nope").exit_code == 2);
    CHECK(run("verify", "CAUSALGAP_SEED=abc").exit_code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
