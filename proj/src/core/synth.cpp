#include "core/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace haorcast {

namespace {

void check_range(const Range& r, const char* name) {
    if (!(r.lo < r.hi) && !(r.lo == r.hi && r.lo == 0.0))
        fail(Errc::invalid_config, std::string(name) + ": range low must be below high");
}

double draw(Rng& rng, const Range& r) { return rng.uniform(r.lo, r.hi); }

const Range& pick(Label label, const Range& flood, const Range& dry) {
    return label == Label::flood ? flood : dry;
}

// Shared channel synthesis for proxy and real events; only the VV band
// source differs between the two.
EventRecord synth_event(const Date& date, Label label, const SynthProfile& p, Rng& rng,
                        const Range& vv_range, Provenance provenance) {
    EventRecord e;
    e.date = date;
    e.label = label;
    e.provenance = provenance;

    const double vv = draw(rng, vv_range);
    const double offset = rng.uniform(p.vh_offset_db - p.vh_offset_jitter_db,
                                      p.vh_offset_db + p.vh_offset_jitter_db);
    const double vh = vv - offset;
    const double rain7 = draw(rng, pick(label, p.flood_rain_7d, p.dry_rain_7d));
    const double soil = draw(rng, pick(label, p.flood_soil, p.dry_soil));
    e.raw_temp_c = p.climatology.monthly_mean_c[date.month - 1] +
                   rng.normal(0.0, p.temp_anomaly_sigma_c);
    const double wind = draw(rng, pick(label, p.flood_wind, p.dry_wind));
    if (!rng.bernoulli(p.ndwi_missing_prob))
        e.ndwi_raw = draw(rng, pick(label, p.flood_ndwi, p.dry_ndwi));
    const double rain12 = draw(rng, pick(label, p.flood_rain_12h, p.dry_rain_12h));
    const double upvv = draw(rng, pick(label, p.flood_upstream_vv, p.dry_upstream_vv));
    const double rain72 = draw(rng, pick(label, p.flood_rain_72h, p.dry_rain_72h));
    e.dashboard.surma_discharge_m3s = draw(rng, pick(label, p.flood_surma, p.dry_surma));
    e.dashboard.barak_discharge_m3s = draw(rng, pick(label, p.flood_barak, p.dry_barak));

    if (label == Label::flood) {
        e.otsu_area_km2 = draw(rng, p.flood_area);
        e.ffwc_confirmed = true;
    } else if (rng.bernoulli(p.dry_unconfirmed_prob)) {
        // Large Otsu extent that FFWC never confirmed still labels dry.
        e.otsu_area_km2 = draw(rng, p.dry_unconfirmed_area);
        e.ffwc_confirmed = false;
    } else {
        e.otsu_area_km2 = draw(rng, p.dry_area);
        e.ffwc_confirmed = rng.bernoulli(0.3);
    }

    e.features = featurize(vv, vh, rain7, soil, e.raw_temp_c, date.month, wind, e.ndwi_raw, rain12,
                           upvv, rain72, p.climatology);
    return e;
}

int draw_weighted_month(Rng& rng, const std::array<int, 12>& weights) {
    int total = 0;
    for (int w : weights) total += w;
    int x = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(total)));
    for (int m = 0; m < 12; ++m) {
        x -= weights[m];
        if (x < 0) return m + 1;
    }
    return 12;
}

// Flood events cluster in the pre-monsoon/monsoon window, dry events in the
// cool season; this is what makes raw temperature a calendar proxy.
constexpr std::array<int, 12> kFloodMonthWeights = {0, 0, 1, 3, 4, 3, 2, 2, 1, 0, 0, 0};
constexpr std::array<int, 12> kDryMonthWeights = {3, 3, 2, 1, 1, 1, 1, 1, 1, 2, 3, 3};

Date draw_date(Rng& rng, int year_lo, int year_hi, Label label) {
    Date d;
    d.year = year_lo + static_cast<int>(rng.uniform_int(year_hi - year_lo + 1));
    d.month = draw_weighted_month(
        rng, label == Label::flood ? kFloodMonthWeights : kDryMonthWeights);
    d.day = 1 + static_cast<int>(rng.uniform_int(28));
    return d;
}

void apply_range(const KvConfig& cfg, const std::string& key, Range& r) {
    r.lo = cfg.get_double(key + "_lo", r.lo);
    r.hi = cfg.get_double(key + "_hi", r.hi);
}

}  // namespace

void SynthProfile::validate() const {
    check_range(proxy_flood_vv, "proxy_flood_vv");
    check_range(proxy_dry_vv, "proxy_dry_vv");
    if (proxy_flood_vv.hi >= proxy_dry_vv.lo)
        fail(Errc::invalid_config, "proxy flood and dry VV bands must not overlap");
    check_range(real_flood_vv, "real_flood_vv");
    check_range(real_dry_vv, "real_dry_vv");
    if (vh_offset_jitter_db < 0.0) fail(Errc::invalid_config, "vh offset jitter must be >= 0");
    if (ndwi_missing_prob < 0.0 || ndwi_missing_prob > 1.0)
        fail(Errc::invalid_config, "ndwi_missing_prob outside [0, 1]");
    if (temp_anomaly_sigma_c <= 0.0) fail(Errc::invalid_config, "temp anomaly sigma must be > 0");
    climatology.validate();
}

SynthProfile load_synth_profile(const std::string& path) {
    const KvConfig cfg = parse_kv_config(read_text_file(path));
    SynthProfile p;
    apply_range(cfg, "proxy_flood_vv", p.proxy_flood_vv);
    apply_range(cfg, "proxy_dry_vv", p.proxy_dry_vv);
    p.vh_offset_db = cfg.get_double("vh_offset_db", p.vh_offset_db);
    p.vh_offset_jitter_db = cfg.get_double("vh_offset_jitter_db", p.vh_offset_jitter_db);
    apply_range(cfg, "real_flood_vv", p.real_flood_vv);
    apply_range(cfg, "real_dry_vv", p.real_dry_vv);
    apply_range(cfg, "flood_rain_7d", p.flood_rain_7d);
    apply_range(cfg, "dry_rain_7d", p.dry_rain_7d);
    apply_range(cfg, "flood_soil", p.flood_soil);
    apply_range(cfg, "dry_soil", p.dry_soil);
    apply_range(cfg, "flood_wind", p.flood_wind);
    apply_range(cfg, "dry_wind", p.dry_wind);
    apply_range(cfg, "flood_ndwi", p.flood_ndwi);
    apply_range(cfg, "dry_ndwi", p.dry_ndwi);
    p.ndwi_missing_prob = cfg.get_double("ndwi_missing_prob", p.ndwi_missing_prob);
    apply_range(cfg, "flood_rain_12h", p.flood_rain_12h);
    apply_range(cfg, "dry_rain_12h", p.dry_rain_12h);
    apply_range(cfg, "flood_upstream_vv", p.flood_upstream_vv);
    apply_range(cfg, "dry_upstream_vv", p.dry_upstream_vv);
    apply_range(cfg, "flood_rain_72h", p.flood_rain_72h);
    apply_range(cfg, "dry_rain_72h", p.dry_rain_72h);
    apply_range(cfg, "flood_surma", p.flood_surma);
    apply_range(cfg, "dry_surma", p.dry_surma);
    apply_range(cfg, "flood_barak", p.flood_barak);
    apply_range(cfg, "dry_barak", p.dry_barak);
    apply_range(cfg, "flood_area", p.flood_area);
    apply_range(cfg, "dry_area", p.dry_area);
    apply_range(cfg, "dry_unconfirmed_area", p.dry_unconfirmed_area);
    p.dry_unconfirmed_prob = cfg.get_double("dry_unconfirmed_prob", p.dry_unconfirmed_prob);
    p.temp_anomaly_sigma_c = cfg.get_double("temp_anomaly_sigma_c", p.temp_anomaly_sigma_c);
    p.validate();
    return p;
}

void AugmentConfig::validate() const {
    if (noise_sigma <= 0.0) fail(Errc::invalid_config, "augment noise sigma must be > 0");
    if (ratio < 1) fail(Errc::invalid_config, "augment ratio must be >= 1");
}

EventRecord make_proxy_event(const Date& date, Label label, const SynthProfile& profile, Rng& rng) {
    profile.validate();
    if (date.year >= 2014)
        fail(Errc::post_sentinel_date,
             "proxy events predate the SAR record; got " + format_date(date));
    return synth_event(date, label, profile, rng,
                       label == Label::flood ? profile.proxy_flood_vv : profile.proxy_dry_vv,
                       Provenance::proxy);
}

EventRecord make_real_event(const Date& date, Label label, const SynthProfile& profile, Rng& rng) {
    profile.validate();
    return synth_event(date, label, profile, rng,
                       label == Label::flood ? profile.real_flood_vv : profile.real_dry_vv,
                       Provenance::real_sar);
}

std::vector<EventRecord> generate_bundled_dataset(std::uint64_t seed, const SynthProfile& profile) {
    profile.validate();
    Rng rng(derive_seed(seed, 0x5eed));

    constexpr std::size_t kRealFlood = 32, kRealDry = 45;
    constexpr std::size_t kProxyFlood = 28, kProxyDry = 26;

    std::vector<Label> real_labels(kRealFlood, Label::flood);
    real_labels.insert(real_labels.end(), kRealDry, Label::dry);
    rng.shuffle(real_labels);
    std::vector<Label> proxy_labels(kProxyFlood, Label::flood);
    proxy_labels.insert(proxy_labels.end(), kProxyDry, Label::dry);
    rng.shuffle(proxy_labels);

    std::vector<EventRecord> events;
    events.reserve(real_labels.size() + proxy_labels.size());
    char id[16];
    for (std::size_t i = 0; i < real_labels.size(); ++i) {
        const Date d = draw_date(rng, 2014, 2024, real_labels[i]);
        EventRecord e = make_real_event(d, real_labels[i], profile, rng);
        std::snprintf(id, sizeof(id), "sar_%03zu", i + 1);
        e.event_id = id;
        events.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < proxy_labels.size(); ++i) {
        const Date d = draw_date(rng, 2009, 2013, proxy_labels[i]);
        EventRecord e = make_proxy_event(d, proxy_labels[i], profile, rng);
        std::snprintf(id, sizeof(id), "px_%03zu", i + 1);
        e.event_id = id;
        events.push_back(std::move(e));
    }
    return events;
}

std::vector<EventRecord> augment_fold(const std::vector<EventRecord>& train_events,
                                      const AugmentConfig& cfg, Rng& rng) {
    cfg.validate();
    if (train_events.empty()) fail(Errc::empty_training_split, "cannot augment an empty split");

    const std::size_t n = train_events.size();
    std::array<double, kFeatureCount> mu{}, sd{};
    for (const auto& e : train_events)
        for (std::size_t f = 0; f < kFeatureCount; ++f) mu[f] += e.features[f];
    for (auto& m : mu) m /= static_cast<double>(n);
    for (const auto& e : train_events)
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            const double d = e.features[f] - mu[f];
            sd[f] += d * d;
        }
    for (auto& s : sd) s = std::sqrt(s / static_cast<double>(n));

    std::vector<EventRecord> out;
    out.reserve(n * (1 + cfg.ratio));
    out.insert(out.end(), train_events.begin(), train_events.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < cfg.ratio; ++k) {
            EventRecord copy = train_events[i];
            copy.parent_id = train_events[i].event_id;
            copy.event_id = train_events[i].event_id + "#a" + std::to_string(k + 1);
            for (std::size_t f = 0; f < kFeatureCount; ++f) {
                // Zero-variance features stay fixed; anything else would
                // invent signal out of numerical noise.
                if (sd[f] == 0.0) continue;
                copy.features[f] += sd[f] * rng.normal(cfg.noise_mean, cfg.noise_sigma);
            }
            // ndwi must stay inside its physical bounds.
            copy.features[7] = std::clamp(copy.features[7], -1.0, 1.0);
            out.push_back(std::move(copy));
        }
    }
    return out;
}

}  // namespace haorcast
