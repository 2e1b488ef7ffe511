#ifndef IRISLOC_IMAGE_OPS_HPP
#define IRISLOC_IMAGE_OPS_HPP

#include <cmath>
#include <vector>

#include "irisloc/errors.hpp"
#include "irisloc/geometry.hpp"
#include "irisloc/image.hpp"

namespace irisloc {

/// Per-pixel signed derivatives plus magnitude and unsigned orientation.
/// Invariants: magnitude = sqrt(gx^2 + gy^2); orientation in [0, 180) degrees.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> gx;
    std::vector<double> gy;
    std::vector<double> magnitude;
    std::vector<double> orientation_deg;

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

/// Central differences gx = (I[x+1] - I[x-1]) / 2 on the interior, one-sided
/// differences on the borders. Orientation is the gradient angle folded into
/// [0, 180) (unsigned convention).
inline GradientField gradients(const GrayImage& img) {
    if (img.width < 3 || img.height < 3)
        throw ImageTooSmallError("gradients: image must be at least 3x3");

    GradientField f;
    f.width = img.width;
    f.height = img.height;
    const std::size_t n = img.pixel_count();
    f.gx.resize(n);
    f.gy.resize(n);
    f.magnitude.resize(n);
    f.orientation_deg.resize(n);

    constexpr double rad_to_deg = 57.295779513082320877;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double dx, dy;
            if (x == 0)
                dx = static_cast<double>(img.at(1, y)) - img.at(0, y);
            else if (x == img.width - 1)
                dx = static_cast<double>(img.at(x, y)) - img.at(x - 1, y);
            else
                dx = (static_cast<double>(img.at(x + 1, y)) - img.at(x - 1, y)) / 2.0;

            if (y == 0)
                dy = static_cast<double>(img.at(x, 1)) - img.at(x, 0);
            else if (y == img.height - 1)
                dy = static_cast<double>(img.at(x, y)) - img.at(x, y - 1);
            else
                dy = (static_cast<double>(img.at(x, y + 1)) - img.at(x, y - 1)) / 2.0;

            const std::size_t i = f.index(x, y);
            f.gx[i] = dx;
            f.gy[i] = dy;
            f.magnitude[i] = std::sqrt(dx * dx + dy * dy);
            double deg = std::atan2(dy, dx) * rad_to_deg;
            if (deg < 0.0) deg += 180.0;
            if (deg >= 180.0) deg -= 180.0;
            f.orientation_deg[i] = deg;
        }
    }
    return f;
}

/// Normalized 1-D Gaussian kernel of radius ceil(3 sigma).
inline std::vector<double> gaussian_kernel_1d(double sigma) {
    if (sigma <= 0.0) throw InvalidArgumentError("gaussian kernel: sigma must be > 0");
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k[static_cast<std::size_t>(i + radius)] = v;
        sum += v;
    }
    for (auto& v : k) v /= sum;
    return k;
}

/// 1-D convolution with edge replication, used for radial-profile smoothing.
inline std::vector<double> smooth_1d(const std::vector<double>& signal, double sigma) {
    const auto k = gaussian_kernel_1d(sigma);
    const int radius = static_cast<int>(k.size() / 2);
    const int n = static_cast<int>(signal.size());
    std::vector<double> out(signal.size());
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = -radius; j <= radius; ++j) {
            int idx = i + j;
            if (idx < 0) idx = 0;
            if (idx > n - 1) idx = n - 1;
            acc += k[static_cast<std::size_t>(j + radius)] * signal[static_cast<std::size_t>(idx)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

/// Separable Gaussian blur with replicated borders. Both passes run in
/// doubles; the result is re-quantized (round half up) once at the end, so
/// GrayImage stays closed under its [0,255] invariant.
inline GrayImage gaussian_blur(const GrayImage& img, double sigma) {
    if (sigma <= 0.0) throw InvalidArgumentError("gaussian_blur: sigma must be > 0");
    const auto k = gaussian_kernel_1d(sigma);
    const int radius = static_cast<int>(k.size() / 2);
    const int w = img.width;
    const int h = img.height;

    std::vector<double> tmp(img.pixel_count());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int j = -radius; j <= radius; ++j) {
                int xx = x + j;
                if (xx < 0) xx = 0;
                if (xx > w - 1) xx = w - 1;
                acc += k[static_cast<std::size_t>(j + radius)] * img.at(xx, y);
            }
            tmp[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }

    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int j = -radius; j <= radius; ++j) {
                int yy = y + j;
                if (yy < 0) yy = 0;
                if (yy > h - 1) yy = h - 1;
                acc += k[static_cast<std::size_t>(j + radius)] * tmp[static_cast<std::size_t>(yy) * w + x];
            }
            out.at(x, y) = quantize_u8(acc);
        }
    }
    return out;
}

/// Clips `box` to the image, crops, and resamples the crop to side x side
/// with center-aligned bilinear interpolation (edge clamp within the crop).
/// With side equal to the box side and an integer-aligned box this is an
/// exact crop.
inline GrayImage crop_resize(const GrayImage& img, const BBox& box, int side) {
    if (side < 1) throw InvalidArgumentError("crop_resize: side must be >= 1");
    const auto clipped = clip_box(box, img.width, img.height);
    if (!clipped) throw EmptyIntersectionError("crop_resize: box does not intersect the image");

    const int bx = clipped->x;
    const int by = clipped->y;
    const int bw = clipped->w;
    const int bh = clipped->h;

    GrayImage out(side, side);
    const double sx_scale = static_cast<double>(bw) / side;
    const double sy_scale = static_cast<double>(bh) / side;
    for (int j = 0; j < side; ++j) {
        const double sy = by + (j + 0.5) * sy_scale - 0.5;
        for (int i = 0; i < side; ++i) {
            const double sx = bx + (i + 0.5) * sx_scale - 0.5;
            const double v = bilinear_clamped(img, sx, sy, bx, by, bx + bw - 1, by + bh - 1);
            out.at(i, j) = quantize_u8(v);
        }
    }
    return out;
}

/// Draws a 1-pixel box outline at the given gray level (overlay rendering).
inline void draw_box_outline(GrayImage& img, const BBox& box, std::uint8_t level) {
    const auto clipped = clip_box(box, img.width, img.height);
    if (!clipped) return;
    const int x0 = clipped->x;
    const int y0 = clipped->y;
    const int x1 = clipped->x + clipped->w - 1;
    const int y1 = clipped->y + clipped->h - 1;
    for (int x = x0; x <= x1; ++x) {
        img.at(x, y0) = level;
        img.at(x, y1) = level;
    }
    for (int y = y0; y <= y1; ++y) {
        img.at(x0, y) = level;
        img.at(x1, y) = level;
    }
}

} // namespace irisloc

#endif // IRISLOC_IMAGE_OPS_HPP
