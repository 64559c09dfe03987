#pragma once

#include <vector>

#include "glint/image.hpp"
#include "glint/metrics.hpp"
#include "glint/mfsr.hpp"
#include "glint/simulate.hpp"

namespace glint::mitigate {

struct BlurConfig {
    int x0 = 0, y0 = 0, width = 0, height = 0;  // region, frame coordinates
    bool ellipse = false;                       // inscribed ellipse instead of the rectangle
    double sigma = 0.0;                         // Gaussian strength, px
    double feather_px = 3.0;                    // linear blend band inside the region edge

    void validate(int frame_w, int frame_h) const;
};

/// Gaussian-blur the region, feathered at its boundary; pixels outside the
/// region are untouched. Linear in the input (no clipping).
Image blur_region(const Image& frame, const BlurConfig& cfg);

/// Leakage left after blurring the reflection area in every frame:
/// synthesize -> blur -> MFSR -> CWSSIM against the scene template,
/// for each sigma in an increasing grid.
std::vector<metrics::SimilarityScore> residual_leakage(const sim::SceneConfig& scene,
                                                       const std::vector<double>& sigma_grid,
                                                       const mfsr::MfsrParams& params = {});

} // namespace glint::mitigate
