#include "core/otsu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace haorcast {

OtsuResult otsu_threshold(const std::vector<double>& values, std::size_t bins) {
    if (bins < 2) fail(Errc::invalid_config, "otsu needs at least 2 histogram bins");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t finite = 0;
    for (double v : values) {
        if (!std::isfinite(v)) continue;
        ++finite;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (finite == 0) fail(Errc::empty_input, "no finite samples");
    if (lo == hi) fail(Errc::degenerate_input, "all samples identical, no threshold exists");

    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<std::size_t> count(bins, 0);
    std::vector<double> sum(bins, 0.0);
    for (double v : values) {
        if (!std::isfinite(v)) continue;
        auto b = static_cast<std::size_t>((v - lo) / width);
        if (b >= bins) b = bins - 1;  // v == hi lands past the last edge
        count[b] += 1;
        sum[b] += v;
    }

    const double total = static_cast<double>(finite);
    double grand_sum = 0.0;
    for (double s : sum) grand_sum += s;

    // Candidate thresholds are the interior bin edges lo + t*width. Low-side
    // statistics accumulate bin by bin in increasing order, which keeps the
    // arithmetic identical to a direct per-candidate summation.
    double best_sigma = -1.0;
    std::size_t best_t = 1;
    std::size_t n0 = 0;
    double s0 = 0.0;
    for (std::size_t t = 1; t < bins; ++t) {
        n0 += count[t - 1];
        s0 += sum[t - 1];
        const std::size_t n1 = finite - n0;
        if (n0 == 0 || n1 == 0) continue;
        const double mu0 = s0 / static_cast<double>(n0);
        const double mu1 = (grand_sum - s0) / static_cast<double>(n1);
        const double w0 = static_cast<double>(n0) / total;
        const double w1 = static_cast<double>(n1) / total;
        const double sigma = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (sigma > best_sigma) {
            best_sigma = sigma;
            best_t = t;
        }
    }
    if (best_sigma < 0.0)
        fail(Errc::degenerate_input, "all samples fall into one histogram bin");

    OtsuResult r;
    r.threshold = lo + static_cast<double>(best_t) * width;
    r.between_class_variance = best_sigma;
    r.histogram_bins = bins;
    return r;
}

FloodMask change_detect(const RasterGrid& reference, const RasterGrid& at_flood,
                        const ChangeDetectConfig& cfg, OtsuResult* otsu_out) {
    reference.validate();
    at_flood.validate();
    if (reference.width != at_flood.width || reference.height != at_flood.height ||
        reference.pixel_size_m != at_flood.pixel_size_m)
        fail(Errc::shape_mismatch, "reference and at-flood grids differ in shape or pixel size");

    const std::size_t n = reference.size();
    std::vector<double> diff(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> finite_diffs;
    finite_diffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = at_flood.values[i];
        const double r = reference.values[i];
        if (std::isfinite(a) && std::isfinite(r)) {
            diff[i] = a - r;
            finite_diffs.push_back(diff[i]);
        }
    }

    const OtsuResult otsu = otsu_threshold(finite_diffs, cfg.bins);
    if (otsu_out) *otsu_out = otsu;

    FloodMask mask;
    mask.width = reference.width;
    mask.height = reference.height;
    mask.pixel_size_m = reference.pixel_size_m;
    mask.flags.resize(n, PixelFlag::nodata);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(diff[i])) continue;
        const bool dropped = diff[i] < otsu.threshold;
        const bool guard_ok = !cfg.use_guard || at_flood.values[i] < cfg.guard_db;
        mask.flags[i] = (dropped && guard_ok) ? PixelFlag::flooded : PixelFlag::dry;
    }
    return mask;
}

double inundated_area_km2(const FloodMask& mask, double pixel_size_m) {
    if (pixel_size_m <= 0.0) fail(Errc::invalid_config, "pixel_size_m must be positive");
    const double km = pixel_size_m / 1000.0;
    return static_cast<double>(mask.flooded_count()) * km * km;
}

CorrespondenceResult spatial_correspondence(const FloodMask& predicted, const FloodMask& reference) {
    if (predicted.width != reference.width || predicted.height != reference.height)
        fail(Errc::shape_mismatch, "mask dimensions differ");

    std::size_t inter = 0, pred = 0, ref = 0;
    for (std::size_t i = 0; i < predicted.flags.size(); ++i) {
        const bool p = predicted.flags[i] == PixelFlag::flooded;
        const bool r = reference.flags[i] == PixelFlag::flooded;
        inter += (p && r);
        pred += p;
        ref += r;
    }
    const std::size_t uni = pred + ref - inter;

    CorrespondenceResult out;
    if (ref == 0)
        out.overlap = (pred == 0) ? 1.0 : 0.0;
    else
        out.overlap = static_cast<double>(inter) / static_cast<double>(ref);
    out.iou = (uni == 0) ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
    return out;
}

}  // namespace haorcast
