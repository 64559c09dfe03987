#pragma once

#include <utility>
#include <vector>

#include "glint/image.hpp"
#include "glint/simulate.hpp"

namespace glint::mfsr {

struct RegistrationResult {
    std::vector<std::pair<double, double>> offsets;  // px, relative to reference frame
    std::vector<double> confidence;                  // phase-correlation peak, [0,1]
    int reference_index = 0;
};

enum class Method { Average, Spline, RobustL1, Akr };

struct MfsrParams {
    Method method = Method::Akr;
    int scale_factor = 2;
    int n_frames = 8;
    // adaptive kernel regression
    double akr_h = 1.5;          // smoothing, HR pixels
    int akr_order = 2;
    bool akr_steering = true;
    // robust L1 + bilateral TV
    double l1_lambda = 0.05;
    int l1_btv_window = 2;
    double l1_btv_alpha = 0.7;
    int l1_iterations = 30;
    double l1_step = 0.05;

    void validate() const;
};

/// Sub-pixel translation registration by phase correlation against the
/// middle frame. Constant frames register as (0,0) with zero confidence.
RegistrationResult register_stack(const sim::FrameStack& stack);

struct Reconstruction {
    Image image;
    bool converged = true;                 // RobustL1 only
    std::vector<double> objective_trace;   // RobustL1 only, per accepted iterate
};

/// Fuse the first n_frames of the stack into one image at
/// scale_factor x the input resolution.
Reconstruction reconstruct(const sim::FrameStack& stack, const MfsrParams& params);

Method method_from_name(const std::string& name);
std::string method_name(Method m);

} // namespace glint::mfsr
