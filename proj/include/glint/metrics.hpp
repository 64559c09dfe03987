#pragma once

#include <vector>

#include "glint/image.hpp"

namespace glint::metrics {

struct SimilarityScore {
    double value = 0.0;                 // in [0,1]
    std::vector<double> level_scores;   // per-pyramid-level diagnostics
};

/// Complex-wavelet structural similarity between two equal-sized images.
/// Small inputs are reflect-padded to 32px. Shift-tolerant by construction:
/// the complex subband correlation magnitude is insensitive to consistent
/// local phase shifts (small translations).
SimilarityScore cwssim(const Image& a, const Image& b);

struct PixelStats {
    double mean;
    double std_dev;  // population
};

PixelStats pixel_stats(const Image& img);

/// Pearson correlation; throws on length mismatch, n < 3, or zero variance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Rectified weighted sum of six per-size recognition accuracies, ordered
/// largest-exponent-first (entry 0 = smallest/hardest text size when
/// weight_smaller_more is set).
double attack_score(const std::vector<double>& accuracies, double w,
                    bool weight_smaller_more = true);

} // namespace glint::metrics
