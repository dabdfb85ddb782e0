// SPDX-License-Identifier: Apache-2.0

#include "cli/config_file.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <string_view>

namespace irs::cli {

namespace {

struct Field {
    const char* key;
    std::function<double&(ScenarioConfig&)> real;
    std::function<std::size_t&(ScenarioConfig&)> count;
};

const std::array<Field, 15>& fields()
{
    static const std::array<Field, 15> table = {{
        {"ap_x", [](ScenarioConfig& c) -> double& { return c.ap_pos.x; }, {}},
        {"ap_y", [](ScenarioConfig& c) -> double& { return c.ap_pos.y; }, {}},
        {"ap_z", [](ScenarioConfig& c) -> double& { return c.ap_pos.z; }, {}},
        {"irs_x", [](ScenarioConfig& c) -> double& { return c.irs_center.x; }, {}},
        {"irs_y", [](ScenarioConfig& c) -> double& { return c.irs_center.y; }, {}},
        {"irs_z", [](ScenarioConfig& c) -> double& { return c.irs_center.z; }, {}},
        {"ue_z", [](ScenarioConfig& c) -> double& { return c.ue_height; }, {}},
        {"freq_hz", [](ScenarioConfig& c) -> double& { return c.frequency_hz; }, {}},
        {"tx_power_w", [](ScenarioConfig& c) -> double& { return c.tx_power_w; }, {}},
        {"noise_power_w", [](ScenarioConfig& c) -> double& { return c.noise_power_w; }, {}},
        {"alpha", [](ScenarioConfig& c) -> double& { return c.path_loss_exponent; }, {}},
        {"d0_m", [](ScenarioConfig& c) -> double& { return c.ref_distance_m; }, {}},
        {"grid_step_m", [](ScenarioConfig& c) -> double& { return c.grid_step_m; }, {}},
        {"nx", {}, [](ScenarioConfig& c) -> std::size_t& { return c.array_cols; }},
        {"ny", {}, [](ScenarioConfig& c) -> std::size_t& { return c.array_rows; }},
    }};
    return table;
}

std::string_view trim(std::string_view s)
{
    const auto* ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(std::string_view text, T& out)
{
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::string format_exact(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ScenarioConfig parse_config(std::istream& in, const std::string& source, std::ostream* log)
{
    ScenarioConfig cfg = scenario_preset(1);

    auto fail = [&](std::size_t line_no, const std::string& what) {
        throw ConfigError(source + ":" + std::to_string(line_no) + ": " + what);
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        text = trim(text);
        if (text.empty())
            continue;

        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            fail(line_no, "expected key=value, got '" + std::string(text) + "'");
        const std::string_view key = trim(text.substr(0, eq));
        const std::string_view value = trim(text.substr(eq + 1));

        const Field* field = nullptr;
        for (const auto& f : fields()) {
            if (key == f.key)
                field = &f;
        }
        if (!field)
            fail(line_no, "unknown key '" + std::string(key) + "'");

        if (field->real) {
            double v = 0.0;
            if (!parse_number(value, v))
                fail(line_no, "value for '" + std::string(key) + "' is not a number: '" +
                                  std::string(value) + "'");
            field->real(cfg) = v;
        } else {
            std::size_t v = 0;
            if (!parse_number(value, v))
                fail(line_no, "value for '" + std::string(key) +
                                  "' is not a non-negative integer: '" + std::string(value) + "'");
            field->count(cfg) = v;
        }
        // Every constraint is per field, so checking after each assignment pins the line.
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
        }
        if (log)
            *log << "config: " << key << " = " << value << " (" << source << ":" << line_no << ")\n";
    }
    if (in.bad())
        throw ConfigError(source + ": read error");

    // A file that reproduces a preset exactly carries that preset's id.
    cfg.id = 0;
    for (int id = 1; id <= 3; ++id) {
        ScenarioConfig preset = scenario_preset(id);
        preset.id = 0;
        if (cfg == preset) {
            cfg.id = id;
            break;
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, std::ostream* log)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string() + ": cannot open file");
    return parse_config(in, path.string(), log);
}

void write_config(std::ostream& out, const ScenarioConfig& cfg)
{
    ScenarioConfig copy = cfg;
    for (const auto& f : fields()) {
        if (f.real)
            out << f.key << '=' << format_exact(f.real(copy)) << '\n';
        else
            out << f.key << '=' << f.count(copy) << '\n';
    }
}

} // namespace irs::cli
