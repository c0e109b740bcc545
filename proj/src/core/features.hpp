#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/climatology.hpp"
#include "core/textio.hpp"

namespace haorcast {

// Canonical feature order. Importance vectors, ablation masks and the model
// file all index against this layout.
inline constexpr std::size_t kFeatureCount = 11;

inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "vv_db",           "vh_db",       "vv_vh_ratio",        "rain_7d_mm",
    "soil_moisture",   "temp_anomaly_c", "wind_kmh",        "ndwi",
    "forecast_rain_12h_mm", "upstream_vv_db", "forecast_rain_72h_mm",
};

int feature_index(const std::string& name);  // throws InvalidConfig on unknown name

struct FeatureVector {
    std::array<double, kFeatureCount> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }

    void validate() const;  // all finite, ndwi within [-1, 1]
};

struct DashboardIndicators {
    double surma_discharge_m3s = 0.0;
    double barak_discharge_m3s = 0.0;
};

enum class Label : int { dry = 0, flood = 1 };
enum class Provenance : int { real_sar = 0, proxy = 1 };

const char* label_name(Label l);
const char* provenance_name(Provenance p);

struct EventRecord {
    std::string event_id;
    Date date{};
    FeatureVector features{};
    DashboardIndicators dashboard{};
    Label label = Label::dry;
    Provenance provenance = Provenance::real_sar;
    double otsu_area_km2 = 0.0;
    bool ffwc_confirmed = false;

    // Retained outside the feature vector so the confound analysis can rerun.
    double raw_temp_c = 0.0;
    std::optional<double> ndwi_raw;  // as stored; missing means zero-filled

    // Set only on augmentation copies; empty for originals.
    std::string parent_id;

    bool is_augmented() const { return !parent_id.empty(); }
};

// VV/VH "ratio": difference in dB equals the ratio in linear power.
double vv_vh_ratio(double vv_db, double vh_db);

// Missing NDWI is zero-filled; present values must lie in [-1, 1].
double fill_ndwi(std::optional<double> ndwi);

Label assign_label(double otsu_area_km2, bool ffwc_confirmed);

// Builds the 11-entry active vector from stored event fields.
FeatureVector featurize(double vv_db, double vh_db, double rain_7d_mm, double soil_moisture,
                        double raw_temp_c, int month, double wind_kmh, std::optional<double> ndwi,
                        double forecast_rain_12h_mm, double upstream_vv_db,
                        double forecast_rain_72h_mm, const ClimatologyTable& clim);

// ---------------------------------------------------------------------------
// Event store (CSV). Column set is fixed; doubles round-trip bit-exactly.
// ---------------------------------------------------------------------------

extern const char* const kEventCsvHeader;

std::vector<EventRecord> parse_events_csv(const std::string& text, const ClimatologyTable& clim,
                                          const std::string& origin);
std::vector<EventRecord> load_events(const std::string& path, const ClimatologyTable& clim);
std::string render_events_csv(const std::vector<EventRecord>& events);
void save_events(const std::vector<EventRecord>& events, const std::string& path);

}  // namespace haorcast
