#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/features.hpp"
#include "core/rng.hpp"

namespace haorcast {

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

// Label-conditional uniform ranges for every generated channel. SAR bands for
// proxies follow the observed post-2014 pixel distributions; the remaining
// channels are a documented convention of this dataset, not an observed
// product (see data/synth_profile.cfg).
struct SynthProfile {
    // Proxy SAR construction: disjoint dB bands.
    Range proxy_flood_vv{-24.0, -18.0};
    Range proxy_dry_vv{-14.0, -9.0};
    double vh_offset_db = 7.0;
    double vh_offset_jitter_db = 1.0;

    // Real-SAR events use overlapping bands so the learning task is not
    // trivially separable.
    Range real_flood_vv{-24.0, -14.0};
    Range real_dry_vv{-18.0, -9.0};

    Range flood_rain_7d{40.0, 190.0};
    Range dry_rain_7d{0.0, 110.0};
    Range flood_soil{0.28, 0.48};
    Range dry_soil{0.12, 0.38};
    Range flood_wind{8.0, 45.0};
    Range dry_wind{4.0, 36.0};
    Range flood_ndwi{0.0, 0.5};
    Range dry_ndwi{-0.35, 0.2};
    double ndwi_missing_prob = 0.69;
    Range flood_rain_12h{4.0, 42.0};
    Range dry_rain_12h{0.0, 22.0};
    Range flood_upstream_vv{-23.0, -13.0};
    Range dry_upstream_vv{-17.0, -8.0};
    Range flood_rain_72h{70.0, 230.0};
    Range dry_rain_72h{0.0, 95.0};
    Range flood_surma{2800.0, 9000.0};
    Range dry_surma{500.0, 5200.0};
    Range flood_barak{3200.0, 9800.0};
    Range dry_barak{700.0, 5600.0};
    Range flood_area{55.0, 240.0};
    Range dry_area{0.0, 48.0};
    Range dry_unconfirmed_area{51.0, 130.0};
    double dry_unconfirmed_prob = 0.2;

    // Raw temperature = monthly climatology + N(0, sigma); the anomaly itself
    // carries no label signal, only the calendar does.
    double temp_anomaly_sigma_c = 1.2;

    ClimatologyTable climatology = default_climatology();

    void validate() const;
};

SynthProfile load_synth_profile(const std::string& path);

struct AugmentConfig {
    double noise_mean = 0.0;
    double noise_sigma = 0.05;  // in z-score units per feature
    std::size_t ratio = 8;      // copies per original
    std::uint64_t seed = 0;

    void validate() const;
};

// Physics-calibrated proxy for a pre-2014 date: SAR channels from the
// label's dB band, everything else from the label-conditional ranges.
EventRecord make_proxy_event(const Date& date, Label label, const SynthProfile& profile, Rng& rng);

// Post-2014 record with overlapping SAR bands; used by the bundled dataset.
EventRecord make_real_event(const Date& date, Label label, const SynthProfile& profile, Rng& rng);

// The bundled 131-event synthetic dataset: 77 real-SAR (32 flood / 45 dry)
// plus 54 proxies (28 flood / 26 dry), deterministic per seed.
std::vector<EventRecord> generate_bundled_dataset(std::uint64_t seed,
                                                  const SynthProfile& profile = SynthProfile{});

// Originals plus cfg.ratio noisy copies per original. Noise is applied in
// per-fold z-score space and mapped back, labels are copied unchanged, and
// copies carry parent_id for leakage auditing.
std::vector<EventRecord> augment_fold(const std::vector<EventRecord>& train_events,
                                      const AugmentConfig& cfg, Rng& rng);

inline std::vector<EventRecord> augment_fold(const std::vector<EventRecord>& train_events,
                                             const AugmentConfig& cfg) {
    Rng rng(cfg.seed);
    return augment_fold(train_events, cfg, rng);
}

}  // namespace haorcast
