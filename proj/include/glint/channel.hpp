#pragma once

#include <string>
#include <vector>

#include "glint/simulate.hpp"

namespace glint::channel {

struct ChannelProfile {
    double upload_kbps = 2000.0;
    int output_height = 720;   // delivered video resolution
    double output_fps = 30.0;
    double quality = 0.9;      // 0..1 compression quality factor

    void validate() const;
};

struct Tier {
    double min_kbps;  // tier applies at bandwidth >= min_kbps
    int height;
    double fps;
    double quality;
};

/// Default bandwidth tiers (descending): >=1500 kbps holds 720p30, then
/// 360p30, 360p15, and 180p10 under 500 kbps.
std::vector<Tier> default_tiers();

/// Qualitative presets for other conferencing services.
std::vector<Tier> skype_tiers();
std::vector<Tier> meet_tiers();

ChannelProfile profile_for_bandwidth(double kbps, const std::vector<Tier>& tiers = default_tiers());

/// Degrade a stack: temporal subsampling to output_fps, resolution round trip
/// scaled by output_height / source_height, and a block-transform
/// quantization surrogate for codec loss. Deterministic.
sim::FrameStack apply_profile(const sim::FrameStack& stack, const ChannelProfile& profile,
                              double source_height = 720.0);

} // namespace glint::channel
