#include "core/climatology.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace haorcast {

void ClimatologyTable::validate() const {
    for (double t : monthly_mean_c) {
        if (!std::isfinite(t) || t < 0.0 || t > 45.0)
            fail(Errc::out_of_range, "monthly mean " + format_double(t) + " C outside [0, 45]");
    }
}

ClimatologyTable default_climatology() {
    return {{17.0, 19.4, 22.0, 24.8, 25.4, 27.1, 27.3, 27.5, 28.3, 27.0, 25.4, 20.1}};
}

ClimatologyTable load_climatology(const std::string& path) {
    ClimatologyTable table{};
    std::array<bool, 12> seen{};
    std::istringstream in(read_text_file(path));
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 2) fail(Errc::parse_error, path + ": expected 'month,temp_c' lines");
        const long m = parse_long(trim(parts[0]), "climatology month");
        if (m < 1 || m > 12) fail(Errc::invalid_month, "climatology month " + parts[0]);
        if (seen[m - 1]) fail(Errc::parse_error, path + ": duplicate month " + parts[0]);
        seen[m - 1] = true;
        table.monthly_mean_c[m - 1] = parse_double(trim(parts[1]), "climatology temp");
    }
    for (int m = 0; m < 12; ++m)
        if (!seen[m]) fail(Errc::parse_error, path + ": missing month " + std::to_string(m + 1));
    table.validate();
    return table;
}

void save_climatology(const ClimatologyTable& table, const std::string& path) {
    std::ostringstream out;
    for (int m = 0; m < 12; ++m)
        out << (m + 1) << ',' << format_double(table.monthly_mean_c[m]) << '\n';
    write_text_file(path, out.str());
}

double temp_anomaly(double t_obs_c, int month, const ClimatologyTable& clim) {
    if (month < 1 || month > 12) fail(Errc::invalid_month, "month " + std::to_string(month));
    if (!std::isfinite(t_obs_c)) fail(Errc::out_of_range, "observed temperature is not finite");
    return t_obs_c - clim.monthly_mean_c[month - 1];
}

}  // namespace haorcast
