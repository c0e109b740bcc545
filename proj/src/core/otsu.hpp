#pragma once

#include <cstddef>
#include <vector>

#include "core/grid.hpp"

namespace haorcast {

struct OtsuResult {
    double threshold = 0.0;              // dB, a histogram bin edge
    double between_class_variance = 0.0; // dB^2
    std::size_t histogram_bins = 0;
};

// Between-class variance maximization over histogram bin edges.
// Class statistics use the raw sample values of each bin (not bin centers);
// ties in variance resolve to the lowest threshold.
OtsuResult otsu_threshold(const std::vector<double>& values, std::size_t bins = 256);

struct ChangeDetectConfig {
    std::size_t bins = 256;
    // Absolute VV guard: a pixel only counts as flooded when the at-flood
    // backscatter is below this, suppressing speckle-driven false positives.
    double guard_db = -15.0;
    bool use_guard = true;
};

// Difference image D = at_flood - reference, Otsu-thresholded; flooded where
// D < t* (and the guard passes). No-data in either input stays no-data.
FloodMask change_detect(const RasterGrid& reference, const RasterGrid& at_flood,
                        const ChangeDetectConfig& cfg = {}, OtsuResult* otsu_out = nullptr);

double inundated_area_km2(const FloodMask& mask, double pixel_size_m);
inline double inundated_area_km2(const FloodMask& mask) {
    return inundated_area_km2(mask, mask.pixel_size_m);
}

struct CorrespondenceResult {
    double overlap = 0.0;  // |P and R| / |R|, the canonical score
    double iou = 0.0;      // |P and R| / |P or R|, secondary
};

CorrespondenceResult spatial_correspondence(const FloodMask& predicted, const FloodMask& reference);

}  // namespace haorcast
