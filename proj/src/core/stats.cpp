#include "core/stats.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace haorcast {

double mean(const std::vector<double>& x) {
    if (x.empty()) fail(Errc::empty_input, "mean of empty vector");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) fail(Errc::length_mismatch, "pearson inputs differ in length");
    if (x.size() < 2) fail(Errc::insufficient_data, "pearson needs at least 2 points");
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

double point_biserial(const std::vector<double>& x, const std::vector<int>& binary) {
    std::vector<double> y(binary.size());
    for (std::size_t i = 0; i < binary.size(); ++i) y[i] = binary[i] ? 1.0 : 0.0;
    return pearson(x, y);
}

// Lentz's continued fraction for the regularized incomplete beta.
static double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided(double t, double nu) {
    if (nu <= 0.0) fail(Errc::invalid_config, "degrees of freedom must be positive");
    if (!std::isfinite(t)) return 0.0;
    const double x = nu / (nu + t * t);
    return incomplete_beta(nu / 2.0, 0.5, x);
}

double correlation_p_value(double r, std::size_t n) {
    if (n < 3) fail(Errc::insufficient_data, "p-value needs n >= 3");
    const double nu = static_cast<double>(n - 2);
    if (std::fabs(r) >= 1.0) return 0.0;
    const double t = r * std::sqrt(nu / (1.0 - r * r));
    return student_t_two_sided(t, nu);
}

double chi2_sf_1dof(double x) {
    if (x < 0.0) fail(Errc::negative_input, "chi-square statistic cannot be negative");
    return std::erfc(std::sqrt(x / 2.0));
}

ConfoundReport confound_report(const std::vector<EventRecord>& events) {
    if (events.size() < 3) fail(Errc::insufficient_data, "confound analysis needs >= 3 events");

    ConfoundReport rep;
    rep.n = events.size();
    std::vector<double> raw(events.size()), anomaly(events.size()), month(events.size());
    std::vector<int> label(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        raw[i] = events[i].raw_temp_c;
        anomaly[i] = events[i].features[5];
        month[i] = static_cast<double>(events[i].date.month);
        label[i] = events[i].label == Label::flood ? 1 : 0;
        rep.n_flood += label[i];
    }
    rep.n_dry = rep.n - rep.n_flood;
    if (rep.n_flood == 0 || rep.n_dry == 0)
        fail(Errc::single_class, "confound analysis needs both classes");

    rep.r_raw_temp_label = point_biserial(raw, label);
    rep.p_raw_temp_label = correlation_p_value(rep.r_raw_temp_label, rep.n);
    rep.r_anomaly_label = point_biserial(anomaly, label);
    rep.p_anomaly_label = correlation_p_value(rep.r_anomaly_label, rep.n);
    rep.r_raw_temp_month = pearson(raw, month);
    return rep;
}

std::string render_confound_report(const ConfoundReport& r) {
    std::ostringstream out;
    out << "haorcast confound report\n";
    out << "schema 1\n";
    out << "events " << r.n << "\n";
    out << "flood " << r.n_flood << "\n";
    out << "dry " << r.n_dry << "\n";
    out << "r_raw_temp_label " << format_double(r.r_raw_temp_label) << "\n";
    out << "p_raw_temp_label " << format_double(r.p_raw_temp_label) << "\n";
    out << "r_anomaly_label " << format_double(r.r_anomaly_label) << "\n";
    out << "p_anomaly_label " << format_double(r.p_anomaly_label) << "\n";
    out << "r_raw_temp_month " << format_double(r.r_raw_temp_month) << "\n";
    return out.str();
}

}  // namespace haorcast
