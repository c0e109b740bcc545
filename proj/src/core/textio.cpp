#include "core/textio.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace haorcast {

std::string format_double(double v) {
    char buf[40];
    // Try increasing precision until the value round-trips exactly.
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

double parse_double(const std::string& s, const char* context) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE)
        fail(Errc::parse_error, std::string("bad number '") + s + "' in " + context);
    return v;
}

long parse_long(const std::string& s, const char* context) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE)
        fail(Errc::parse_error, std::string("bad integer '") + s + "' in " + context);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) fail(Errc::io_error, "short write to '" + path + "'");
}

std::optional<std::string> KvConfig::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return std::nullopt;
}

double KvConfig::get_double(const std::string& key, double fallback) const {
    const auto v = get(key);
    return v ? parse_double(*v, key.c_str()) : fallback;
}

KvConfig parse_kv_config(const std::string& text) {
    KvConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(Errc::parse_error, "config line " + std::to_string(lineno) + " lacks '='");
        cfg.entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

Date parse_date(const std::string& s) {
    const auto parts = split(s, '-');
    if (parts.size() != 3) fail(Errc::parse_error, "date '" + s + "' is not YYYY-MM-DD");
    Date d;
    d.year = static_cast<int>(parse_long(parts[0], "date year"));
    d.month = static_cast<int>(parse_long(parts[1], "date month"));
    d.day = static_cast<int>(parse_long(parts[2], "date day"));
    if (d.month < 1 || d.month > 12) fail(Errc::invalid_month, "month " + parts[1]);
    if (d.day < 1 || d.day > 31) fail(Errc::parse_error, "day " + parts[2]);
    return d;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace haorcast
