#ifndef IRISLOC_GEOMETRY_HPP
#define IRISLOC_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "irisloc/errors.hpp"

namespace irisloc {

/// Axis-aligned box covering the pixel set [x, x+w) x [y, y+h).
/// Annotation and prediction boxes are square by intent; clipping against
/// the image border may break w == h, in which case `square_intent` still
/// records what the box meant and side() gives the scale-bookkeeping side.
struct BBox {
    int x = 0;
    int y = 0;
    int w = 1;
    int h = 1;
    bool square_intent = true;

    std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }

    /// min(w, h); equals the true side for unclipped square boxes.
    int side() const { return std::min(w, h); }

    bool operator==(const BBox& o) const {
        return x == o.x && y == o.y && w == o.w && h == o.h;
    }
};

/// Iris circle hypothesis: center (cx, cy) and radius r, in pixels.
struct CircleParams {
    double cx = 0.0;
    double cy = 0.0;
    double r = 1.0;
};

/// Box clipped to a width x height image domain, or nullopt when the
/// intersection is empty.
inline std::optional<BBox> clip_box(const BBox& b, int img_w, int img_h) {
    const int x0 = std::max(b.x, 0);
    const int y0 = std::max(b.y, 0);
    const int x1 = std::min(b.x + b.w, img_w);
    const int y1 = std::min(b.y + b.h, img_h);
    if (x1 <= x0 || y1 <= y0) return std::nullopt;
    return BBox{x0, y0, x1 - x0, y1 - y0, b.square_intent};
}

inline std::int64_t intersection_area(const BBox& a, const BBox& b) {
    const std::int64_t iw =
        std::max(0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
    const std::int64_t ih =
        std::max(0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
    return iw * ih;
}

/// Intersection over union of two boxes. 0 when both are degenerate.
inline double box_iou(const BBox& a, const BBox& b) {
    const std::int64_t inter = intersection_area(a, b);
    const std::int64_t uni = a.area() + b.area() - inter;
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

/// Smallest square box enclosing the circle (side 2r, centered), clipped to
/// the image. A clip that breaks squareness keeps the clipped rectangle;
/// side() then reports min(w, h) for scale bookkeeping.
inline BBox circle_to_bbox(const CircleParams& c, int img_w, int img_h) {
    if (c.r <= 0.0) throw InvalidArgumentError("circle_to_bbox: radius must be > 0");
    const int x0 = static_cast<int>(std::llround(c.cx - c.r));
    const int y0 = static_cast<int>(std::llround(c.cy - c.r));
    const int side = static_cast<int>(std::llround(2.0 * c.r));
    const BBox raw{x0, y0, std::max(side, 1), std::max(side, 1), true};
    const auto clipped = clip_box(raw, img_w, img_h);
    if (!clipped) throw InvalidArgumentError("circle_to_bbox: circle lies outside the image");
    return *clipped;
}

} // namespace irisloc

#endif // IRISLOC_GEOMETRY_HPP
