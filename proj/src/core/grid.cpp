#include "core/grid.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "core/error.hpp"
#include "core/textio.hpp"

namespace haorcast {

namespace {

constexpr double kMinDb = -60.0;
constexpr double kMaxDb = 20.0;

struct GridHeader {
    std::size_t width;
    std::size_t height;
    double pixel_size_m;
};

GridHeader parse_header(std::istringstream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) fail(Errc::parse_error, origin + ": empty grid file");
    std::istringstream hs(line);
    long w = 0, h = 0;
    double px = 0.0;
    if (!(hs >> w >> h >> px) || w <= 0 || h <= 0)
        fail(Errc::parse_error, origin + ": header must be 'width height pixel_size_m'");
    if (px <= 0.0) fail(Errc::invalid_config, origin + ": pixel_size_m must be positive");
    return {static_cast<std::size_t>(w), static_cast<std::size_t>(h), px};
}

}  // namespace

void RasterGrid::validate() const {
    if (width == 0 || height == 0 || values.size() != width * height)
        fail(Errc::shape_mismatch, "raster dimensions do not match value count");
    if (pixel_size_m <= 0.0) fail(Errc::invalid_config, "pixel_size_m must be positive");
    for (double v : values) {
        if (std::isfinite(v) && (v < kMinDb || v > kMaxDb))
            fail(Errc::out_of_range, "backscatter " + format_double(v) + " dB outside [-60, 20]");
    }
}

RasterGrid parse_raster(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    const GridHeader hdr = parse_header(in, origin);
    RasterGrid g;
    g.width = hdr.width;
    g.height = hdr.height;
    g.pixel_size_m = hdr.pixel_size_m;
    g.values.reserve(g.size());
    std::string tok;
    while (in >> tok) {
        if (tok == "NA")
            g.values.push_back(std::numeric_limits<double>::quiet_NaN());
        else
            g.values.push_back(parse_double(tok, origin.c_str()));
    }
    if (g.values.size() != g.size())
        fail(Errc::parse_error, origin + ": expected " + std::to_string(g.size()) + " values, got " +
                                    std::to_string(g.values.size()));
    g.validate();
    return g;
}

RasterGrid load_raster(const std::string& path) {
    return parse_raster(read_text_file(path), path);
}

void save_raster(const RasterGrid& grid, const std::string& path) {
    grid.validate();
    std::ostringstream out;
    out << grid.width << ' ' << grid.height << ' ' << format_double(grid.pixel_size_m) << '\n';
    for (std::size_t r = 0; r < grid.height; ++r) {
        for (std::size_t c = 0; c < grid.width; ++c) {
            if (c) out << ' ';
            const double v = grid.at(r, c);
            if (std::isfinite(v))
                out << format_double(v);
            else
                out << "NA";
        }
        out << '\n';
    }
    write_text_file(path, out.str());
}

std::size_t FloodMask::flooded_count() const {
    std::size_t n = 0;
    for (PixelFlag f : flags) n += (f == PixelFlag::flooded);
    return n;
}

FloodMask parse_mask(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    const GridHeader hdr = parse_header(in, origin);
    FloodMask m;
    m.width = hdr.width;
    m.height = hdr.height;
    m.pixel_size_m = hdr.pixel_size_m;
    m.flags.reserve(m.size());
    std::string tok;
    while (in >> tok) {
        if (tok == "NA")
            m.flags.push_back(PixelFlag::nodata);
        else if (tok == "0")
            m.flags.push_back(PixelFlag::dry);
        else if (tok == "1")
            m.flags.push_back(PixelFlag::flooded);
        else
            fail(Errc::parse_error, origin + ": mask value must be 0, 1 or NA, got '" + tok + "'");
    }
    if (m.flags.size() != m.size())
        fail(Errc::parse_error, origin + ": expected " + std::to_string(m.size()) + " flags, got " +
                                    std::to_string(m.flags.size()));
    return m;
}

FloodMask load_mask(const std::string& path) {
    return parse_mask(read_text_file(path), path);
}

std::string render_mask(const FloodMask& mask) {
    std::ostringstream out;
    out << mask.width << ' ' << mask.height << ' ' << format_double(mask.pixel_size_m) << '\n';
    for (std::size_t r = 0; r < mask.height; ++r) {
        for (std::size_t c = 0; c < mask.width; ++c) {
            if (c) out << ' ';
            switch (mask.flags[r * mask.width + c]) {
                case PixelFlag::dry: out << '0'; break;
                case PixelFlag::flooded: out << '1'; break;
                case PixelFlag::nodata: out << "NA"; break;
            }
        }
        out << '\n';
    }
    return out.str();
}

void save_mask(const FloodMask& mask, const std::string& path) {
    write_text_file(path, render_mask(mask));
}

}  // namespace haorcast
