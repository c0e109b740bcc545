#pragma once

#include <optional>
#include <string>
#include <vector>

namespace haorcast {

// Shortest text form that round-trips a double bit-exactly through strtod.
std::string format_double(double v);

double parse_double(const std::string& s, const char* context);
long parse_long(const std::string& s, const char* context);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// key=value configuration lines; '#' starts a comment.
struct KvConfig {
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> get(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
};

KvConfig parse_kv_config(const std::string& text);

// Calendar date; only validity checks needed by the event store.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    bool operator==(const Date&) const = default;
};

Date parse_date(const std::string& s);
std::string format_date(const Date& d);

}  // namespace haorcast
