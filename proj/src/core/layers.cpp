#include "core/layers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace haorcast {

const char* tier_name(RiskTier t) {
    switch (t) {
        case RiskTier::low: return "LOW";
        case RiskTier::medium: return "MEDIUM";
        case RiskTier::high: return "HIGH";
        case RiskTier::extreme: return "EXTREME";
    }
    return "LOW";
}

RiskTier tier_from_name(const std::string& name) {
    if (name == "LOW") return RiskTier::low;
    if (name == "MEDIUM") return RiskTier::medium;
    if (name == "HIGH") return RiskTier::high;
    if (name == "EXTREME") return RiskTier::extreme;
    fail(Errc::parse_error, "unknown risk tier '" + name + "'");
}

void DischargeThresholds::validate() const {
    if (!(danger_m3s > high_m3s) || !(high_m3s > 0.0))
        fail(Errc::invalid_config, "discharge thresholds must satisfy danger > high > 0");
    if (high_delta < 0.0 || high_delta > danger_delta || danger_delta > 0.15)
        fail(Errc::invalid_config, "discharge deltas must satisfy 0 <= high <= danger <= 0.15");
}

void TrendConfig::validate() const {
    if (window_days < 2) fail(Errc::invalid_config, "trend window too short");
    if (smooth_days < 1 || smooth_days % 2 == 0)
        fail(Errc::invalid_config, "smoothing window must be odd");
    if (!(min_r2 > 0.0 && min_r2 < 1.0)) fail(Errc::invalid_config, "min_r2 outside (0, 1)");
    if (!(delta_min > 0.0 && delta_min <= delta_max))
        fail(Errc::invalid_config, "trend deltas must satisfy 0 < min <= max");
    if (slope_at_delta_max <= min_slope_m3s_per_day)
        fail(Errc::invalid_config, "slope_at_delta_max must exceed the trigger slope");
}

double discharge_adjust(double barak_m3s, const DischargeThresholds& th) {
    th.validate();
    if (barak_m3s < 0.0) fail(Errc::negative_discharge, "discharge cannot be negative");
    if (barak_m3s >= th.danger_m3s) return th.danger_delta;
    if (barak_m3s >= th.high_m3s) return th.high_delta;
    return 0.0;
}

TrendFit trend_adjust(const std::vector<double>& series_m3s, const TrendConfig& cfg) {
    cfg.validate();
    if (series_m3s.size() != cfg.window_days)
        fail(Errc::wrong_length, "trend series must have exactly " +
                                     std::to_string(cfg.window_days) + " daily values");
    for (double v : series_m3s) {
        if (!std::isfinite(v)) fail(Errc::wrong_length, "trend series value is not finite");
        if (v < 0.0) fail(Errc::negative_discharge, "discharge cannot be negative");
    }

    // Centered moving average with truncated windows at the ends; each
    // smoothed value is paired with the centroid of the days it averaged, so
    // the regression is unbiased on affine series.
    const std::size_t n = series_m3s.size();
    const std::size_t half = cfg.smooth_days / 2;
    std::vector<double> smoothed(n), position(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double sum = 0.0, center = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) {
            sum += series_m3s[j];
            center += static_cast<double>(j);
        }
        const double count = static_cast<double>(hi - lo + 1);
        smoothed[i] = sum / count;
        position[i] = center / count;
    }

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += position[i];
        my += smoothed[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = position[i] - mx;
        const double dy = smoothed[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }

    TrendFit fit;
    fit.slope_m3s_per_day = sxy / sxx;
    // Constant series: r^2 defined as 0, never triggers.
    fit.r2 = (syy == 0.0) ? 0.0 : (sxy * sxy) / (sxx * syy);

    const bool rising = fit.slope_m3s_per_day > 0.0;
    const bool triggered = rising && fit.r2 >= cfg.min_r2 &&
                           fit.slope_m3s_per_day >= cfg.min_slope_m3s_per_day;
    if (triggered) {
        const double span = cfg.slope_at_delta_max - cfg.min_slope_m3s_per_day;
        const double frac = (fit.slope_m3s_per_day - cfg.min_slope_m3s_per_day) / span;
        fit.delta = std::clamp(cfg.delta_min + (cfg.delta_max - cfg.delta_min) * frac,
                               cfg.delta_min, cfg.delta_max);
    }
    return fit;
}

PredictionBreakdown combine(double p_base, double delta_discharge, double delta_trend) {
    if (!(p_base >= 0.0 && p_base <= 1.0))
        fail(Errc::out_of_range, "p_base " + format_double(p_base) + " outside [0, 1]");
    if (delta_discharge < 0.0 || delta_trend < 0.0)
        fail(Errc::out_of_range, "layer deltas cannot be negative");

    PredictionBreakdown b;
    b.p_base = p_base;
    b.delta_discharge = delta_discharge;
    b.delta_trend = delta_trend;
    const double delta_total = delta_discharge + delta_trend;
    b.cap_applied = delta_total >= 0.30;
    b.delta_total_capped = std::min(delta_total, 0.30);
    const double raw = p_base + b.delta_total_capped;
    b.ceiling_applied = raw >= 0.95;
    b.p_final = std::min(raw, 0.95);
    b.tier = risk_tier(b.p_final);
    return b;
}

RiskTier risk_tier(double p_final) {
    if (!(p_final >= 0.0 && p_final <= 0.95))
        fail(Errc::out_of_range, "p_final " + format_double(p_final) + " outside [0, 0.95]");
    if (p_final < 0.40) return RiskTier::low;
    if (p_final < 0.65) return RiskTier::medium;
    if (p_final < 0.85) return RiskTier::high;
    return RiskTier::extreme;
}

Classification classify(double p_final) {
    if (!(p_final >= 0.0 && p_final <= 0.95))
        fail(Errc::out_of_range, "p_final " + format_double(p_final) + " outside [0, 0.95]");
    return p_final >= 0.40 ? Classification::flood : Classification::dry;
}

std::string render_breakdown(const PredictionBreakdown& b) {
    std::ostringstream out;
    out << "haorcast breakdown\n";
    out << "schema 1\n";
    out << "p_base " << format_double(b.p_base) << '\n';
    out << "delta_discharge " << format_double(b.delta_discharge) << '\n';
    out << "delta_trend " << format_double(b.delta_trend) << '\n';
    out << "delta_total_capped " << format_double(b.delta_total_capped) << '\n';
    out << "cap_applied " << (b.cap_applied ? 1 : 0) << '\n';
    out << "ceiling_applied " << (b.ceiling_applied ? 1 : 0) << '\n';
    out << "p_final " << format_double(b.p_final) << '\n';
    out << "tier " << tier_name(b.tier) << '\n';
    out << "classification "
        << (classify(b.p_final) == Classification::flood ? "flood" : "dry") << '\n';
    return out.str();
}

PredictionBreakdown parse_breakdown(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "haorcast breakdown")
        fail(Errc::parse_error, origin + ": not a breakdown file");
    PredictionBreakdown b;
    bool have_p_final = false, have_tier = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto sp = line.find(' ');
        if (sp == std::string::npos) fail(Errc::parse_error, origin + ": malformed line " + line);
        const std::string key = line.substr(0, sp);
        const std::string value = trim(line.substr(sp + 1));
        if (key == "p_base") b.p_base = parse_double(value, "p_base");
        else if (key == "delta_discharge") b.delta_discharge = parse_double(value, "delta_discharge");
        else if (key == "delta_trend") b.delta_trend = parse_double(value, "delta_trend");
        else if (key == "delta_total_capped")
            b.delta_total_capped = parse_double(value, "delta_total_capped");
        else if (key == "cap_applied") b.cap_applied = value == "1";
        else if (key == "ceiling_applied") b.ceiling_applied = value == "1";
        else if (key == "p_final") {
            b.p_final = parse_double(value, "p_final");
            have_p_final = true;
        } else if (key == "tier") {
            b.tier = tier_from_name(value);
            have_tier = true;
        }
        // schema and classification lines are informational
    }
    if (!have_p_final) fail(Errc::parse_error, origin + ": missing p_final");
    if (!have_tier) b.tier = risk_tier(b.p_final);
    return b;
}

}  // namespace haorcast
