#ifndef IRISLOC_IMAGE_HPP
#define IRISLOC_IMAGE_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "irisloc/errors.hpp"

namespace irisloc {

/// 8-bit single-channel raster, row-major. The universal input type.
/// Invariant: data.size() == width * height; every value is in [0, 255]
/// by construction of the element type.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
        if (w < 1 || h < 1) throw InvalidArgumentError("GrayImage dimensions must be >= 1");
    }

    std::uint8_t at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Round half up and clamp into the 8-bit range.
inline std::uint8_t quantize_u8(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

/// Bilinear sample at continuous (x, y) with coordinates clamped to the
/// rectangle [x_lo, x_hi] x [y_lo, y_hi] (pixel-center coordinates).
inline double bilinear_clamped(const GrayImage& img, double x, double y,
                               int x_lo, int y_lo, int x_hi, int y_hi) {
    if (x < x_lo) x = x_lo;
    if (x > x_hi) x = x_hi;
    if (y < y_lo) y = y_lo;
    if (y > y_hi) y = y_hi;
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = x0 + 1 > x_hi ? x_hi : x0 + 1;
    const int y1 = y0 + 1 > y_hi ? y_hi : y0 + 1;
    const double fx = x - x0;
    const double fy = y - y0;
    const double top = (1.0 - fx) * img.at(x0, y0) + fx * img.at(x1, y0);
    const double bot = (1.0 - fx) * img.at(x0, y1) + fx * img.at(x1, y1);
    return (1.0 - fy) * top + fy * bot;
}

/// Bilinear sample clamped to the full image.
inline double bilinear_at(const GrayImage& img, double x, double y) {
    return bilinear_clamped(img, x, y, 0, 0, img.width - 1, img.height - 1);
}

} // namespace irisloc

#endif // IRISLOC_IMAGE_HPP
