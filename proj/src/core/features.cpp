#include "core/features.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace haorcast {

int feature_index(const std::string& name) {
    for (std::size_t i = 0; i < kFeatureCount; ++i)
        if (name == kFeatureNames[i]) return static_cast<int>(i);
    fail(Errc::invalid_config, "unknown feature name '" + name + "'");
}

void FeatureVector::validate() const {
    for (std::size_t i = 0; i < kFeatureCount; ++i)
        if (!std::isfinite(v[i]))
            fail(Errc::out_of_range, std::string("feature ") + kFeatureNames[i] + " is not finite");
    const double ndwi = v[7];
    if (ndwi < -1.0 || ndwi > 1.0)
        fail(Errc::out_of_range, "ndwi " + format_double(ndwi) + " outside [-1, 1]");
}

const char* label_name(Label l) { return l == Label::flood ? "flood" : "dry"; }
const char* provenance_name(Provenance p) { return p == Provenance::proxy ? "proxy" : "real_sar"; }

double vv_vh_ratio(double vv_db, double vh_db) {
    if (!std::isfinite(vv_db) || !std::isfinite(vh_db))
        fail(Errc::out_of_range, "backscatter must be finite");
    return vv_db - vh_db;
}

double fill_ndwi(std::optional<double> ndwi) {
    if (!ndwi || std::isnan(*ndwi)) return 0.0;
    if (*ndwi < -1.0 || *ndwi > 1.0)
        fail(Errc::out_of_range, "ndwi " + format_double(*ndwi) + " outside [-1, 1]");
    return *ndwi;
}

Label assign_label(double otsu_area_km2, bool ffwc_confirmed) {
    if (otsu_area_km2 < 0.0) fail(Errc::negative_input, "inundated area cannot be negative");
    return (otsu_area_km2 > 50.0 && ffwc_confirmed) ? Label::flood : Label::dry;
}

FeatureVector featurize(double vv_db, double vh_db, double rain_7d_mm, double soil_moisture,
                        double raw_temp_c, int month, double wind_kmh, std::optional<double> ndwi,
                        double forecast_rain_12h_mm, double upstream_vv_db,
                        double forecast_rain_72h_mm, const ClimatologyTable& clim) {
    FeatureVector f;
    f[0] = vv_db;
    f[1] = vh_db;
    f[2] = vv_vh_ratio(vv_db, vh_db);
    f[3] = rain_7d_mm;
    f[4] = soil_moisture;
    f[5] = temp_anomaly(raw_temp_c, month, clim);
    f[6] = wind_kmh;
    f[7] = fill_ndwi(ndwi);
    f[8] = forecast_rain_12h_mm;
    f[9] = upstream_vv_db;
    f[10] = forecast_rain_72h_mm;
    f.validate();
    return f;
}

const char* const kEventCsvHeader =
    "event_id,date,vv_db,vh_db,rain_7d_mm,soil_moisture,raw_temp_c,wind_kmh,ndwi,"
    "forecast_rain_12h_mm,upstream_vv_db,forecast_rain_72h_mm,surma_m3s,barak_m3s,"
    "otsu_area_km2,ffwc_confirmed,provenance,label";

namespace {

constexpr std::size_t kColumnCount = 18;

bool parse_bool(const std::string& s, const std::string& origin) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    fail(Errc::parse_error, origin + ": boolean must be 0/1/true/false, got '" + s + "'");
}

}  // namespace

std::vector<EventRecord> parse_events_csv(const std::string& text, const ClimatologyTable& clim,
                                          const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) fail(Errc::parse_error, origin + ": empty event store");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kEventCsvHeader)
        fail(Errc::parse_error, origin + ": unexpected event store header");

    std::vector<EventRecord> events;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto cols = split(line, ',');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (cols.size() != kColumnCount)
            fail(Errc::parse_error, where + ": expected " + std::to_string(kColumnCount) + " columns");

        EventRecord e;
        e.event_id = cols[0];
        if (e.event_id.empty()) fail(Errc::parse_error, where + ": empty event_id");
        e.date = parse_date(cols[1]);
        const double vv = parse_double(cols[2], "vv_db");
        const double vh = parse_double(cols[3], "vh_db");
        const double rain7 = parse_double(cols[4], "rain_7d_mm");
        const double soil = parse_double(cols[5], "soil_moisture");
        e.raw_temp_c = parse_double(cols[6], "raw_temp_c");
        const double wind = parse_double(cols[7], "wind_kmh");
        if (!trim(cols[8]).empty()) e.ndwi_raw = parse_double(cols[8], "ndwi");
        const double rain12 = parse_double(cols[9], "forecast_rain_12h_mm");
        const double upvv = parse_double(cols[10], "upstream_vv_db");
        const double rain72 = parse_double(cols[11], "forecast_rain_72h_mm");
        e.dashboard.surma_discharge_m3s = parse_double(cols[12], "surma_m3s");
        e.dashboard.barak_discharge_m3s = parse_double(cols[13], "barak_m3s");
        e.otsu_area_km2 = parse_double(cols[14], "otsu_area_km2");
        e.ffwc_confirmed = parse_bool(cols[15], where);
        if (cols[16] == "real_sar")
            e.provenance = Provenance::real_sar;
        else if (cols[16] == "proxy")
            e.provenance = Provenance::proxy;
        else
            fail(Errc::parse_error, where + ": provenance must be real_sar or proxy");
        if (cols[17] == "flood")
            e.label = Label::flood;
        else if (cols[17] == "dry")
            e.label = Label::dry;
        else
            fail(Errc::parse_error, where + ": label must be flood or dry");
        if (e.dashboard.surma_discharge_m3s < 0.0 || e.dashboard.barak_discharge_m3s < 0.0)
            fail(Errc::negative_discharge, where + ": dashboard discharge cannot be negative");
        if (e.provenance == Provenance::proxy && e.date.year >= 2014)
            fail(Errc::parse_error, where + ": proxy events must predate 2014");

        e.features = featurize(vv, vh, rain7, soil, e.raw_temp_c, e.date.month, wind, e.ndwi_raw,
                               rain12, upvv, rain72, clim);
        events.push_back(std::move(e));
    }
    return events;
}

std::vector<EventRecord> load_events(const std::string& path, const ClimatologyTable& clim) {
    return parse_events_csv(read_text_file(path), clim, path);
}

std::string render_events_csv(const std::vector<EventRecord>& events) {
    std::ostringstream out;
    out << kEventCsvHeader << '\n';
    for (const auto& e : events) {
        out << e.event_id << ',' << format_date(e.date) << ',' << format_double(e.features[0])
            << ',' << format_double(e.features[1]) << ',' << format_double(e.features[3]) << ','
            << format_double(e.features[4]) << ',' << format_double(e.raw_temp_c) << ','
            << format_double(e.features[6]) << ',';
        if (e.ndwi_raw) out << format_double(*e.ndwi_raw);
        out << ',' << format_double(e.features[8]) << ',' << format_double(e.features[9]) << ','
            << format_double(e.features[10]) << ','
            << format_double(e.dashboard.surma_discharge_m3s) << ','
            << format_double(e.dashboard.barak_discharge_m3s) << ','
            << format_double(e.otsu_area_km2) << ',' << (e.ffwc_confirmed ? '1' : '0') << ','
            << provenance_name(e.provenance) << ',' << label_name(e.label) << '\n';
    }
    return out.str();
}

void save_events(const std::vector<EventRecord>& events, const std::string& path) {
    write_text_file(path, render_events_csv(events));
}

}  // namespace haorcast
