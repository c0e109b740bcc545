#pragma once

#include <string>
#include <vector>

namespace haorcast {

enum class RiskTier : int { low = 0, medium = 1, high = 2, extreme = 3 };

const char* tier_name(RiskTier t);
RiskTier tier_from_name(const std::string& name);

struct DischargeThresholds {
    double high_m3s = 6000.0;
    double danger_m3s = 7500.0;
    double high_delta = 0.10;
    double danger_delta = 0.15;

    void validate() const;
};

struct TrendConfig {
    std::size_t window_days = 14;
    std::size_t smooth_days = 3;
    double min_r2 = 0.60;
    double min_slope_m3s_per_day = 100.0;
    double delta_min = 0.05;
    double delta_max = 0.15;
    double slope_at_delta_max = 500.0;

    void validate() const;
};

struct PredictionBreakdown {
    double p_base = 0.0;
    double delta_discharge = 0.0;
    double delta_trend = 0.0;
    double delta_total_capped = 0.0;
    double p_final = 0.0;
    RiskTier tier = RiskTier::low;
    bool cap_applied = false;
    bool ceiling_applied = false;
};

// Step adjustment from the instantaneous Barak discharge: 0 below HIGH,
// +0.10 in [HIGH, DANGER), +0.15 at or above DANGER.
double discharge_adjust(double barak_m3s, const DischargeThresholds& th = {});

struct TrendFit {
    double delta = 0.0;
    double slope_m3s_per_day = 0.0;
    double r2 = 0.0;
};

// 3-day smoothed OLS trend over a 14-day series. Smoothed points regress
// against their window centroids so an exact linear series keeps its slope
// and r^2 = 1. Fires only for rising trends passing both quality gates.
TrendFit trend_adjust(const std::vector<double>& series_m3s, const TrendConfig& cfg = {});

// Cap at +0.30 total, ceiling at 0.95; flags record binding caps.
PredictionBreakdown combine(double p_base, double delta_discharge, double delta_trend);

RiskTier risk_tier(double p_final);

enum class Classification : int { dry = 0, flood = 1 };

// Operational decision threshold 0.40 (FFWC MEDIUM boundary).
Classification classify(double p_final);

std::string render_breakdown(const PredictionBreakdown& b);
PredictionBreakdown parse_breakdown(const std::string& text, const std::string& origin);

}  // namespace haorcast
