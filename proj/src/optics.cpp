#include "glint/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace glint::optics {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
} // namespace

void ScreenSpec::validate() const {
    require(physical_height_mm > 0 && physical_width_mm > 0, "screen: physical size must be positive");
    require(os_resolution_height > 0, "screen: os_resolution_height must be positive");
    require(os_zoom > 0 && os_zoom <= 10 && browser_zoom > 0 && browser_zoom <= 10,
            "screen: zoom ratios must be in (0, 10]");
}

void TextSpec::validate() const {
    require(point_size > 0, "text: point_size must be positive");
    require(cap_ratio > 0 && cap_ratio < 1, "text: cap_ratio must be in (0, 1)");
}

void CameraSpec::validate() const {
    require(pixels_on_axis >= 1, "camera: pixels_on_axis must be >= 1");
    require(fw_ratio >= 0.5 && fw_ratio <= 5.0, "camera: fw_ratio must be in [0.5, 5]");
    require(frame_rate > 0, "camera: frame_rate must be positive");
    require(exposure_time_s > 0, "camera: exposure_time must be positive");
    require(iso_gain > 0, "camera: iso_gain must be positive");
}

CameraSpec CameraSpec::from_vertical_fov(double fov_deg, double pixels) {
    CameraSpec cam;
    cam.pixels_on_axis = pixels;
    cam.fw_ratio = fw_from_fov(fov_deg);
    cam.validate();
    return cam;
}

void GlassesSpec::validate() const {
    require(focal_length_mm > 0, "glasses: focal_length must be positive");
    const double diameter = 2.0 * (2.0 * focal_length_mm);  // sphere diameter, radius = 2f
    require(chord_h_mm > 0 && chord_h_mm < diameter, "glasses: horizontal chord exceeds sphere");
    require(chord_v_mm > 0 && chord_v_mm < diameter, "glasses: vertical chord exceeds sphere");
    require(reflectance > 0 && reflectance <= 1, "glasses: reflectance must be in (0, 1]");
    require(coating_condition >= 0 && coating_condition <= 1, "glasses: coating_condition must be in [0, 1]");
}

void Geometry::validate() const {
    require(glass_screen_distance_mm > 0, "geometry: glass_screen_distance must be positive");
    require(head_center_to_lens_mm > 0, "geometry: head_center_to_lens must be positive");
    require(std::abs(head_rotation_deg) < 90, "geometry: |head_rotation| must be < 90 degrees");
}

double cap_height_mm(const TextSpec& text, const ScreenSpec& screen) {
    text.validate();
    screen.validate();
    // 1pt renders as 4/3 display pixels in common browsers.
    return (4.0 / 3.0) * text.point_size * (screen.physical_height_mm / screen.os_resolution_height) *
           screen.os_zoom * screen.browser_zoom * text.cap_ratio;
}

MirrorImage convex_mirror_image(double h_mm, double d_mm, double f_mm) {
    require(h_mm > 0 && d_mm > 0 && f_mm > 0, "convex_mirror_image: inputs must be positive");
    const double scale = f_mm / (d_mm + f_mm);
    return {h_mm * scale, d_mm * scale};
}

double reflection_pixel_size(double h_mm, const Geometry& geom, const GlassesSpec& glasses,
                             const CameraSpec& cam) {
    require(h_mm >= 0, "reflection_pixel_size: object height must be >= 0");
    geom.validate();
    glasses.validate();
    cam.validate();
    const double d = geom.glass_screen_distance_mm;
    const double f = glasses.focal_length_mm;
    return h_mm * f / (d * d + 2.0 * d * f) * cam.fw_ratio * cam.pixels_on_axis;
}

double motion_blur_pixels(double displacement_mm, const Geometry& geom, const GlassesSpec& glasses,
                          const CameraSpec& cam) {
    require(displacement_mm >= 0, "motion_blur_pixels: displacement must be >= 0");
    return reflection_pixel_size(displacement_mm, geom, glasses, cam);
}

double tremor_displacement_mm(double amplitude_mm, double frequency_hz, double exposure_time_s) {
    require(amplitude_mm >= 0 && frequency_hz >= 0 && exposure_time_s >= 0,
            "tremor_displacement: inputs must be >= 0");
    // max-min of A*sin(2*pi*f*t) over any window of length t_exp
    if (frequency_hz * exposure_time_s >= 0.5) return 2.0 * amplitude_mm;
    return 2.0 * amplitude_mm * std::sin(kPi * frequency_hz * exposure_time_s);
}

double lens_power_diopters(double outer_radius_mm, double inner_radius_mm, double n) {
    require(outer_radius_mm != 0 && inner_radius_mm != 0, "lens_power: zero surface radius");
    const double r_o = outer_radius_mm / 1000.0;  // mm -> m
    const double r_i = inner_radius_mm / 1000.0;
    return (n - 1.0) * (1.0 / r_o - 1.0 / r_i);
}

double fw_from_fov(double fov_deg) {
    require(fov_deg > 0 && fov_deg < 180, "fw_from_fov: fov must be in (0, 180)");
    return 1.0 / (2.0 * std::tan(fov_deg * kDeg / 2.0));
}

double fov_from_fw(double fw_ratio) {
    require(fw_ratio > 0, "fov_from_fw: ratio must be positive");
    return 2.0 * std::atan(1.0 / (2.0 * fw_ratio)) / kDeg;
}

// ---------------------------------------------------------------------------
// Viewing angles.
//
// 2-D model: origin at the head rotation center, lens vertex at distance s on
// the +x axis in the aligned pose, spherical lens of radius R = 2f, camera at
// (s + d, 0) in the screen plane. For a lens point at chord offset c the
// camera ray is mirrored about the sphere normal; the reflected line's
// intersection with the screen plane tells which screen point is visible at
// that lens point.
// ---------------------------------------------------------------------------

namespace {

struct Swath {
    double lo, hi;
    bool valid;
};

// Screen-plane intersections of the reflected camera rays across the chord.
Swath reflected_swath(double theta_rad, double s, double d, double radius, double chord,
                      int samples = 17) {
    const double e = s + d;  // camera/screen plane x
    double lo = 0.0, hi = 0.0;
    bool any = false;
    const int n = chord > 0 ? samples : 1;
    for (int i = 0; i < n; ++i) {
        const double c = n > 1 ? -chord / 2.0 + chord * i / (n - 1) : 0.0;
        const double under = radius * radius - c * c;
        if (under <= 0) continue;
        // lens surface point in the unrotated pose
        const double x0 = std::sqrt(under) - (radius - s);
        const double y0 = c;
        const double ct = std::cos(theta_rad), st = std::sin(theta_rad);
        const double ax = x0 * ct - y0 * st;
        const double ay = x0 * st + y0 * ct;
        const double cx = (s - radius) * ct;  // rotated sphere center
        const double cy = (s - radius) * st;
        if (std::abs(ax - cx) < 1e-12 || std::abs(ax - e) < 1e-12) continue;
        const double b1 = (ay - cy) / (ax - cx);  // normal slope
        const double b2 = ay / (ax - e);          // incident (camera ray) slope
        const double den = b1 * b1 - 2.0 * b1 * b2 - 1.0;
        if (std::abs(den) < 1e-12) continue;
        const double b3 = (b2 - 2.0 * b1 - b1 * b1 * b2) / den;  // mirrored slope
        const double y3 = ay + b3 * (e - ax);
        if (!std::isfinite(y3)) continue;
        if (!any) {
            lo = hi = y3;
            any = true;
        } else {
            lo = std::min(lo, y3);
            hi = std::max(hi, y3);
        }
    }
    return {lo, hi, any};
}

bool pose_feasible(double theta_rad, double s, double d, double radius, double chord,
                   double seg_lo, double seg_hi, ViewingMode mode) {
    const Swath sw = reflected_swath(theta_rad, s, d, radius, chord);
    if (!sw.valid) return false;
    if (mode == ViewingMode::AllPage || chord <= 0.0)
        return sw.hi >= seg_lo && sw.lo <= seg_hi;
    const double center = 0.5 * (seg_lo + seg_hi);
    return sw.lo <= center && sw.hi >= center;
}

// Largest rotation magnitude (one side) still feasible, to 0.1 degrees.
double side_limit(int sign, double s, double d, double radius, double chord, double seg_lo,
                  double seg_hi, ViewingMode mode) {
    auto ok = [&](double deg) {
        return pose_feasible(sign * deg * kDeg, s, d, radius, chord, seg_lo, seg_hi, mode);
    };
    double prev = 0.0;
    for (double deg = 1.0; deg <= 90.0; deg += 1.0) {
        if (!ok(deg)) {
            double a = prev, b = deg;
            while (b - a > 0.1) {
                const double m = 0.5 * (a + b);
                (ok(m) ? a : b) = m;
            }
            return a;
        }
        prev = deg;
    }
    return 90.0;
}

} // namespace

AngleInterval viewing_angle_range(const Geometry& geom, const GlassesSpec& glasses,
                                  const ScreenSegment& screen, ViewingMode mode, Axis axis) {
    geom.validate();
    glasses.validate();
    const double s = geom.head_center_to_lens_mm;
    const double d = geom.glass_screen_distance_mm;
    const double radius = 2.0 * glasses.focal_length_mm;
    const double chord = axis == Axis::Horizontal ? glasses.chord_h_mm : glasses.chord_v_mm;
    const double seg_lo = -screen.below_mm;
    const double seg_hi = screen.above_mm;

    if (!pose_feasible(0.0, s, d, radius, chord, seg_lo, seg_hi, mode))
        return {0.0, false};
    const double pos = side_limit(+1, s, d, radius, chord, seg_lo, seg_hi, mode);
    const double neg = side_limit(-1, s, d, radius, chord, seg_lo, seg_hi, mode);
    return {std::min(pos, neg), true};
}

std::vector<AngleReference> reference_viewing_angles() {
    GlassesSpec prescription;  // low curvature
    prescription.focal_length_mm = 500.0;
    prescription.chord_h_mm = 60.0;
    prescription.chord_v_mm = 50.0;

    GlassesSpec blue_light;  // high curvature
    blue_light.focal_length_mm = 80.0;
    blue_light.chord_h_mm = 50.0;
    blue_light.chord_v_mm = 40.0;

    const double width = 380.0, height = 190.0;
    return {
        {prescription, Axis::Horizontal, ViewingMode::AllPage, width, 15.0},
        {prescription, Axis::Horizontal, ViewingMode::Center, width, 5.0},
        {prescription, Axis::Vertical, ViewingMode::AllPage, height, 9.0},
        {prescription, Axis::Vertical, ViewingMode::Center, height, 3.0},
        {blue_light, Axis::Horizontal, ViewingMode::AllPage, width, 20.0},
        {blue_light, Axis::Horizontal, ViewingMode::Center, width, 10.0},
        {blue_light, Axis::Vertical, ViewingMode::AllPage, height, 14.0},
        {blue_light, Axis::Vertical, ViewingMode::Center, height, 8.0},
    };
}

HeadOffsetFit calibrate_head_offset(const std::vector<AngleReference>& rows,
                                    double glass_screen_distance_mm, double lo_mm, double hi_mm,
                                    double step_mm) {
    require(!rows.empty(), "calibrate_head_offset: no reference rows");
    require(lo_mm > 0 && hi_mm > lo_mm && step_mm > 0, "calibrate_head_offset: bad search grid");

    auto predict = [&](double s) {
        std::vector<double> out;
        out.reserve(rows.size());
        Geometry geom;
        geom.glass_screen_distance_mm = glass_screen_distance_mm;
        geom.head_center_to_lens_mm = s;
        for (const auto& row : rows) {
            const auto iv = viewing_angle_range(geom, row.glasses,
                                                ScreenSegment::centered(row.screen_length_mm),
                                                row.mode, row.axis);
            out.push_back(iv.feasible ? iv.degrees : 0.0);
        }
        return out;
    };

    double best_s = lo_mm;
    double best_sse = -1.0;
    std::vector<double> best_pred;
    for (double s = lo_mm; s <= hi_mm + 1e-9; s += step_mm) {
        const auto pred = predict(s);
        double sse = 0.0;
        for (size_t i = 0; i < rows.size(); ++i) {
            const double e = pred[i] - rows[i].reference_deg;
            sse += e * e;
        }
        if (best_sse < 0 || sse < best_sse) {
            best_sse = sse;
            best_s = s;
            best_pred = pred;
        }
    }
    return {best_s, std::sqrt(best_sse / rows.size()), best_pred};
}

} // namespace glint::optics
