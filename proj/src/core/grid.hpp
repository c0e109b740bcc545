#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace haorcast {

// Row-major grid of SAR backscatter in dB. Any non-finite value is no-data.
struct RasterGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    double pixel_size_m = 30.0;
    std::vector<double> values;

    std::size_t size() const { return width * height; }
    double at(std::size_t row, std::size_t col) const { return values[row * width + col]; }

    // Throws on inconsistent dimensions, non-positive pixel size, or finite
    // values outside the physical [-60, +20] dB band.
    void validate() const;
};

enum class PixelFlag : unsigned char { dry = 0, flooded = 1, nodata = 2 };

struct FloodMask {
    std::size_t width = 0;
    std::size_t height = 0;
    double pixel_size_m = 30.0;
    std::vector<PixelFlag> flags;

    std::size_t size() const { return width * height; }
    std::size_t flooded_count() const;
};

// Plain-text grid files: header "width height pixel_size_m", then row-major
// whitespace-separated values, NA for no-data. Masks use 0/1/NA.
RasterGrid load_raster(const std::string& path);
RasterGrid parse_raster(const std::string& text, const std::string& origin);
void save_raster(const RasterGrid& grid, const std::string& path);

FloodMask load_mask(const std::string& path);
FloodMask parse_mask(const std::string& text, const std::string& origin);
std::string render_mask(const FloodMask& mask);
void save_mask(const FloodMask& mask, const std::string& path);

}  // namespace haorcast
