#include "glint/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "glint/glyphs.hpp"
#include "glint/rng.hpp"

namespace glint::sim {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

struct CanvasLayout {
    double cap_px;     // text cap height at camera resolution
    double margin_px;  // border around the text block
    int width, height;
};

CanvasLayout layout_for(const SceneConfig& scene) {
    const double h_mm = optics::cap_height_mm(scene.text, scene.screen);
    const double cap = optics::reflection_pixel_size(h_mm, scene.geometry, scene.glasses, scene.camera);
    const double px_per_mm = cap / h_mm;
    const double sway = scene.tremor.amplitude_mm * px_per_mm;
    const double margin = std::max(4.0, scene.crop_margin_caps * cap + sway + 2.0);
    const double block_w = glyphs::text_advance(scene.text.content) * cap;
    CanvasLayout l;
    l.cap_px = cap;
    l.margin_px = margin;
    l.width = static_cast<int>(std::ceil(block_w + 2 * margin));
    l.height = static_cast<int>(std::ceil(cap + 2 * margin));
    return l;
}

// signal/veil irradiance factors; the coating damage diverts specular signal
// into a diffuse veil
struct IrradianceModel {
    double signal_reflectance;  // screen image path
    double veil;                // flat ambient + scatter floor
};

IrradianceModel irradiance_model(const SceneConfig& scene) {
    const auto& l = scene.lighting;
    const auto& g = scene.glasses;
    IrradianceModel m;
    m.signal_reflectance = g.reflectance * g.coating_condition;
    m.veil = l.env_illuminance * (l.face_reflectance + g.reflectance) +
             l.screen_luminance * g.reflectance * (1.0 - g.coating_condition) * 0.5;
    return m;
}

// extreme displacement of A*sin(tau*f*t + phase) over [t0, t0+dt]
double window_travel(double amp, double freq, double phase, double t0, double dt) {
    if (amp <= 0 || dt <= 0) return 0.0;
    auto value = [&](double t) { return amp * std::sin(kTau * freq * t + phase); };
    double lo = value(t0), hi = lo;
    const double v1 = value(t0 + dt);
    lo = std::min(lo, v1);
    hi = std::max(hi, v1);
    if (freq > 0) {
        // interior critical points of the sinusoid
        const double period = 1.0 / freq;
        double tc = (std::ceil((t0 + period / 4) / (period / 2)) * (period / 2)) - period / 4;
        for (; tc < t0 + dt; tc += period / 2) {
            if (tc > t0) {
                const double v = value(tc);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    return hi - lo;
}

} // namespace

void SceneConfig::validate() const {
    screen.validate();
    text.validate();
    glasses.validate();
    camera.validate();
    geometry.validate();
    require(lighting.text_gray >= 0 && lighting.text_gray <= 255 &&
                lighting.background_gray >= 0 && lighting.background_gray <= 255,
            "scene: gray levels must be in [0, 255]");
    require(lighting.face_reflectance >= 0 && lighting.face_reflectance <= 1,
            "scene: face_reflectance must be in [0, 1]");
    require(lighting.screen_luminance >= 0 && lighting.env_illuminance >= 0,
            "scene: luminances must be >= 0");
    require(tremor.amplitude_mm >= 0 && tremor.frequency_hz >= 0, "scene: tremor must be >= 0");
    require(photon_scale > 0, "scene: photon_scale must be positive");
    require(read_noise >= 0, "scene: read_noise must be >= 0");
}

void FrameStack::validate() const {
    require(!frames.empty(), "stack: needs at least one frame");
    for (const auto& f : frames)
        require(f.same_shape(frames.front()), "stack: frames must share one shape");
}

Image render_template(const std::string& content, double cap_height_px, double ink, double background) {
    require(cap_height_px >= 3.0, "render_template: cap height must be >= 3 px");
    glyphs::RenderOptions opt;
    opt.ink = ink;
    opt.background = background;
    opt.margin_px = std::max(4.0, 0.25 * cap_height_px);
    return glyphs::render_text(content, cap_height_px, opt);
}

Image scene_irradiance(const SceneConfig& scene, double dx_px, double dy_px, int scale) {
    const CanvasLayout l = layout_for(scene);
    const auto m = irradiance_model(scene);
    glyphs::RenderOptions opt;
    opt.ink = scene.lighting.text_gray / 255.0;
    opt.background = scene.lighting.background_gray / 255.0;
    opt.margin_px = l.margin_px * scale;
    opt.offset_x = dx_px * scale;
    opt.offset_y = dy_px * scale;
    opt.canvas_w = l.width * scale;
    opt.canvas_h = l.height * scale;
    Image gray = glyphs::render_text(scene.text.content, l.cap_px * scale, opt);
    for (double& v : gray.px)
        v = scene.lighting.screen_luminance * m.signal_reflectance * v + m.veil;
    return gray;
}

Image scene_template(const SceneConfig& scene, int scale) {
    scene.validate();
    const CanvasLayout l = layout_for(scene);
    glyphs::RenderOptions opt;
    opt.margin_px = l.margin_px * scale;
    opt.canvas_w = l.width * scale;
    opt.canvas_h = l.height * scale;
    return glyphs::render_text(scene.text.content, l.cap_px * scale, opt);
}

ExposureSetting auto_exposure(const SceneConfig& scene) {
    scene.validate();
    // Frame-global mean irradiance model: ambient-lit room and face plus a
    // small screen spill term.
    const double global = scene.lighting.env_illuminance * kSceneMeterReflectance +
                          scene.lighting.screen_luminance * kScreenSpill;
    const double full_exposure = 1.0 / scene.camera.frame_rate;
    ExposureSetting e;
    if (global <= 0.0) {
        e.exposure_time_s = full_exposure;
        e.gain = kMaxGain;
        e.saturated = true;
        return e;
    }
    const double needed = kExposureTarget / global;  // tau * gain product
    const double tau = std::min(1.0, needed);
    double gain = needed / tau;
    if (gain > kMaxGain) {
        gain = kMaxGain;
        e.saturated = true;
    }
    if (gain < 1.0) gain = 1.0;
    e.exposure_time_s = tau * full_exposure;
    e.gain = gain;
    return e;
}

ExposureSetting scene_exposure(const SceneConfig& scene) {
    if (scene.camera.exposure_policy == optics::ExposurePolicy::Auto) return auto_exposure(scene);
    ExposureSetting e;
    e.exposure_time_s = std::min(scene.camera.exposure_time_s, 1.0 / scene.camera.frame_rate);
    e.gain = scene.camera.iso_gain;
    return e;
}

FrameStack synthesize_frames(const SceneConfig& scene, int n_frames) {
    scene.validate();
    require(n_frames >= 1, "synthesize_frames: n_frames must be >= 1");

    const CanvasLayout l = layout_for(scene);
    const double h_mm = optics::cap_height_mm(scene.text, scene.screen);
    const double px_per_mm = l.cap_px / h_mm;
    const ExposureSetting exposure = scene_exposure(scene);
    const double tau = exposure.exposure_time_s * scene.camera.frame_rate;  // fraction of full
    const double gain = exposure.gain;

    Rng master(scene.rng_seed);
    Rng tremor_rng = master.fork(1);
    const double phase_x = tremor_rng.uniform(0.0, kTau);
    const double phase_y = tremor_rng.uniform(0.0, kTau);

    const double amp_x_px = scene.tremor.amplitude_mm * px_per_mm;
    const double amp_y_px = 0.5 * scene.tremor.amplitude_mm * px_per_mm;
    const double freq = scene.tremor.frequency_hz;

    FrameStack stack;
    stack.frame_rate = scene.camera.frame_rate;
    stack.seed = scene.rng_seed;
    stack.cap_height_px = l.cap_px;
    stack.unresolvable = l.cap_px < 1.0;
    stack.exposure = exposure;

    double dx0 = 0.0, dy0 = 0.0;
    for (int j = 0; j < n_frames; ++j) {
        const double t = j / scene.camera.frame_rate;
        double dx = amp_x_px * std::sin(kTau * freq * t + phase_x);
        double dy = amp_y_px * std::sin(kTau * freq * t + phase_y);
        if (j == 0) {
            dx0 = dx;
            dy0 = dy;
        }
        Image irr = scene_irradiance(scene, dx, dy, 1);

        // motion blur across the exposure window
        const double blur_x = window_travel(amp_x_px, freq, phase_x, t, exposure.exposure_time_s);
        const double blur_y = window_travel(amp_y_px, freq, phase_y, t, exposure.exposure_time_s);
        if (blur_x > 1.0 || blur_y > 1.0) irr = box_blur(irr, blur_x, blur_y);

        Rng frame_rng = master.fork(100 + j);
        Image out(irr.width, irr.height);
        const double photons_full = scene.photon_scale;
        for (size_t i = 0; i < irr.px.size(); ++i) {
            const double mu = std::max(0.0, irr.px[i]) * tau * photons_full;
            const double counts = static_cast<double>(frame_rng.poisson(mu));
            double v = counts / photons_full * gain;
            if (scene.read_noise > 0) v += frame_rng.normal(0.0, scene.read_noise * gain);
            out.px[i] = v;
        }
        quantize8(out);
        stack.frames.push_back(std::move(out));
        stack.true_offsets.emplace_back(dx - dx0, dy - dy0);
    }
    return stack;
}

} // namespace glint::sim
