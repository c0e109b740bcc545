#pragma once

#include <array>
#include <string>

namespace haorcast {

// Monthly 2 m temperature baseline, January first, degrees C.
struct ClimatologyTable {
    std::array<double, 12> monthly_mean_c;

    void validate() const;
};

// Sunamganj ERA5-Land 2009-2024 monthly means.
ClimatologyTable default_climatology();

// 12-line "month,temp_c" file; months may appear in any order but each
// exactly once.
ClimatologyTable load_climatology(const std::string& path);
void save_climatology(const ClimatologyTable& table, const std::string& path);

// Deseasonalized temperature: observation minus the month's baseline.
double temp_anomaly(double t_obs_c, int month, const ClimatologyTable& clim);

}  // namespace haorcast
