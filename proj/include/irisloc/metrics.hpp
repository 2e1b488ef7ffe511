#ifndef IRISLOC_METRICS_HPP
#define IRISLOC_METRICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "irisloc/errors.hpp"
#include "irisloc/geometry.hpp"

namespace irisloc {

/// Pixel-level confusion counts over the full image grid.
/// Invariant: tp + fp + fn + tn = image width * height.
struct EvalCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }

    bool operator==(const EvalCounts& o) const {
        return tp == o.tp && fp == o.fp && fn == o.fn && tn == o.tn;
    }
};

/// The four ratio metrics plus per-image wall time.
struct MetricsReport {
    double recall = 0.0;
    double precision = 0.0;
    double accuracy = 0.0;
    double iou = 0.0;
    double seconds = 0.0;
};

/// Confusion counts between ground-truth and predicted boxes, computed in
/// closed form from interval overlaps (no rasterization). Both boxes are
/// clipped to the image first; a box that vanishes after clipping is an
/// error rather than a zero score, so detector bugs surface distinctly.
inline EvalCounts pixel_counts(const BBox& gt, const BBox& pred, int img_w, int img_h) {
    if (img_w < 1 || img_h < 1)
        throw InvalidArgumentError("pixel_counts: image dimensions must be >= 1");
    const auto g = clip_box(gt, img_w, img_h);
    if (!g) throw EmptyAfterClipError("pixel_counts: ground-truth box empty after clipping");
    const auto p = clip_box(pred, img_w, img_h);
    if (!p) throw EmptyAfterClipError("pixel_counts: predicted box empty after clipping");

    EvalCounts c;
    c.tp = intersection_area(*g, *p);
    c.fp = p->area() - c.tp;
    c.fn = g->area() - c.tp;
    c.tn = static_cast<std::int64_t>(img_w) * img_h - g->area() - p->area() + c.tp;
    return c;
}

/// Counts for an image with a ground-truth box but no prediction at all
/// (a missed detection): everything outside gt is a true negative.
inline EvalCounts missed_counts(const BBox& gt, int img_w, int img_h) {
    if (img_w < 1 || img_h < 1)
        throw InvalidArgumentError("missed_counts: image dimensions must be >= 1");
    const auto g = clip_box(gt, img_w, img_h);
    if (!g) throw EmptyAfterClipError("missed_counts: ground-truth box empty after clipping");
    EvalCounts c;
    c.fn = g->area();
    c.tn = static_cast<std::int64_t>(img_w) * img_h - g->area();
    return c;
}

/// Recall = TP/(TP+FN), Precision = TP/(TP+FP),
/// Accuracy = (TP+TN)/(TP+TN+FP+FN), IoU = TP/(FP+TP+FN).
/// 0/0 ratios resolve to 0 (pessimistic; cannot inflate aggregates).
inline MetricsReport metrics(const EvalCounts& c) {
    if (c.total() <= 0) throw InvalidArgumentError("metrics: counts sum to zero");
    MetricsReport m;
    m.recall = (c.tp + c.fn) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
    m.precision = (c.tp + c.fp) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
    m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
    m.iou = (c.tp + c.fp + c.fn) > 0
                ? static_cast<double>(c.tp) / (c.tp + c.fp + c.fn)
                : 0.0;
    return m;
}

/// Dataset-level summary row: unweighted means of each metric, as
/// percentages, plus mean per-image time. Rounding happens only at
/// presentation time.
struct AggregateRow {
    double recall_pct = 0.0;
    double precision_pct = 0.0;
    double accuracy_pct = 0.0;
    double iou_pct = 0.0;
    double mean_seconds = 0.0;
    std::size_t n_images = 0;
};

inline AggregateRow aggregate(const std::vector<MetricsReport>& reports) {
    if (reports.empty()) throw EmptyListError("aggregate: no reports");
    AggregateRow row;
    row.n_images = reports.size();
    for (const auto& r : reports) {
        row.recall_pct += r.recall;
        row.precision_pct += r.precision;
        row.accuracy_pct += r.accuracy;
        row.iou_pct += r.iou;
        row.mean_seconds += r.seconds;
    }
    const double n = static_cast<double>(reports.size());
    row.recall_pct = row.recall_pct / n * 100.0;
    row.precision_pct = row.precision_pct / n * 100.0;
    row.accuracy_pct = row.accuracy_pct / n * 100.0;
    row.iou_pct = row.iou_pct / n * 100.0;
    row.mean_seconds /= n;
    return row;
}

/// For each threshold, the fraction of images whose recall meets it.
/// Non-increasing in the threshold; the fraction at threshold 0 is 1.
inline std::vector<std::pair<double, double>> recall_curve(
    const std::vector<double>& recalls, const std::vector<double>& thresholds) {
    if (recalls.empty()) throw EmptyListError("recall_curve: no recalls");
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (thresholds[i] < thresholds[i - 1])
            throw InvalidArgumentError("recall_curve: thresholds must be sorted ascending");

    std::vector<std::pair<double, double>> curve;
    curve.reserve(thresholds.size());
    for (const double t : thresholds) {
        std::size_t count = 0;
        for (const double r : recalls)
            if (r >= t) ++count;
        curve.emplace_back(t, static_cast<double>(count) / static_cast<double>(recalls.size()));
    }
    return curve;
}

} // namespace irisloc

#endif // IRISLOC_METRICS_HPP
