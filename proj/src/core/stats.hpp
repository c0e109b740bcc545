#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/features.hpp"

namespace haorcast {

double mean(const std::vector<double>& x);

// Pearson correlation; 0 when either variance vanishes.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Point-biserial correlation is Pearson with the binary variable as {0,1}.
double point_biserial(const std::vector<double>& x, const std::vector<int>& binary);

// Two-sided p-value for a correlation r at sample size n, via the exact
// t-transform with n-2 degrees of freedom.
double correlation_p_value(double r, std::size_t n);

// Student-t two-sided survival: P(|T_nu| >= |t|).
double student_t_two_sided(double t, double nu);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Chi-square survival function with 1 degree of freedom.
double chi2_sf_1dof(double x);

struct ConfoundReport {
    std::size_t n = 0;
    std::size_t n_flood = 0;
    std::size_t n_dry = 0;
    double r_raw_temp_label = 0.0;
    double p_raw_temp_label = 1.0;
    double r_anomaly_label = 0.0;
    double p_anomaly_label = 1.0;
    double r_raw_temp_month = 0.0;  // month as linear 1..12 index
};

// Quantifies the seasonal temperature confound on an event set: raw
// temperature vs label, deseasonalized anomaly vs label, and raw
// temperature vs calendar month.
ConfoundReport confound_report(const std::vector<EventRecord>& events);

std::string render_confound_report(const ConfoundReport& r);

}  // namespace haorcast
