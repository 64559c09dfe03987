#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glint/image.hpp"
#include "glint/optics.hpp"

namespace glint::sim {

struct TremorSpec {
    double amplitude_mm = 2.0;  // peak displacement
    double frequency_hz = 5.0;
};

struct Lighting {
    double screen_luminance = 1.0;    // fraction of max screen brightness
    double env_illuminance = 0.1;     // ambient level, relative units
    double face_reflectance = 0.3;    // background behind the lens
    double text_gray = 0.0;           // 0..255
    double background_gray = 255.0;   // 0..255
};

struct SceneConfig {
    optics::ScreenSpec screen;
    optics::TextSpec text;
    optics::GlassesSpec glasses;
    optics::CameraSpec camera;
    optics::Geometry geometry;
    Lighting lighting;
    TremorSpec tremor;
    double photon_scale = 5000.0;   // photons per unit irradiance per full exposure
    double read_noise = 0.01;       // fraction of full scale at unit gain
    double crop_margin_caps = 1.2;  // crop margin around the text block, in cap heights
    uint64_t rng_seed = 0x5eed;

    void validate() const;
};

struct ExposureSetting {
    double exposure_time_s;
    double gain;
    bool saturated = false;  // target unreachable within bounds
};

struct FrameStack {
    std::vector<Image> frames;                            // normalized [0,1]
    double frame_rate = 30.0;
    std::vector<std::pair<double, double>> true_offsets;  // px, per frame, vs frame 0
    uint64_t seed = 0;
    double cap_height_px = 0.0;    // reflection pixel size of the text cap
    bool unresolvable = false;     // cap below one pixel
    ExposureSetting exposure{0.0, 1.0, false};

    void validate() const;
};

/// Anti-aliased glyph template at the requested capital-letter pixel height.
/// Deterministic; requires cap_height_px >= 3.
Image render_template(const std::string& content, double cap_height_px,
                      double ink = 0.0, double background = 1.0);

/// Noiseless reflection reference for a scene at a resolution multiple of the
/// simulated crop (scale 1 = camera resolution). Same canvas layout as the
/// synthesized frames, without tremor, noise, or exposure scaling.
Image scene_template(const SceneConfig& scene, int scale = 1);

/// Exposure the camera firmware would pick for the scene. The overall frame
/// is dominated by the ambient-lit face, not by the small lens reflection, so
/// a dark room drives exposure up until the reflection clips.
ExposureSetting auto_exposure(const SceneConfig& scene);

/// Effective (t_exp, gain) for the scene under its configured policy.
ExposureSetting scene_exposure(const SceneConfig& scene);

/// mean ambient reflectance of the scene the camera meters on
constexpr double kSceneMeterReflectance = 0.35;
constexpr double kScreenSpill = 0.02;
constexpr double kExposureTarget = 0.5;
constexpr double kMaxGain = 16.0;

/// Synthesize a stack of webcam frames of the eyeglass reflection.
FrameStack synthesize_frames(const SceneConfig& scene, int n_frames);

/// Composite irradiance field of the reflection crop (before exposure,
/// noise, and quantization), with the text ink shifted by (dx, dy) px.
Image scene_irradiance(const SceneConfig& scene, double dx_px, double dy_px, int scale = 1);

} // namespace glint::sim
