#pragma once

#include <optional>
#include <string>
#include <vector>

namespace glint::optics {

/// Display the victim text is shown on. Lengths in millimeters.
struct ScreenSpec {
    double physical_height_mm = 190.0;   // panel height
    double physical_width_mm = 380.0;    // panel width (horizontal viewing-angle extent)
    double os_resolution_height = 1080;  // OS-configured vertical resolution, pixels
    double os_zoom = 1.0;                // OS scaling ratio
    double browser_zoom = 1.0;           // browser zoom ratio

    void validate() const;
};

struct TextSpec {
    double point_size = 56.0;
    double cap_ratio = 2.0 / 3.0;        // cap height / em height
    std::string content = "TEXT";

    void validate() const;
};

enum class ExposurePolicy { Auto, Manual };

struct CameraSpec {
    double pixels_on_axis = 720;         // vertical pixel count
    double fw_ratio = 1.2;               // focal length / sensor height
    double frame_rate = 30.0;            // fps
    double exposure_time_s = 1.0 / 60.0;
    double iso_gain = 1.0;
    ExposurePolicy exposure_policy = ExposurePolicy::Manual;

    void validate() const;
    static CameraSpec from_vertical_fov(double fov_deg, double pixels_on_axis);
};

struct GlassesSpec {
    double focal_length_mm = 500.0;      // outer-surface focal length (positive)
    double chord_h_mm = 60.0;            // horizontal lens chord
    double chord_v_mm = 50.0;            // vertical lens chord
    double reflectance = 0.1;            // outer-surface reflectance, (0,1]
    double coating_condition = 1.0;      // 1 = intact coating
    double refractive_index = 1.5;
    std::optional<double> inner_radius_mm;

    void validate() const;
};

struct Geometry {
    double glass_screen_distance_mm = 400.0;  // lens to screen
    double head_center_to_lens_mm = 102.0;    // rotation center to lens vertex
    double head_rotation_deg = 0.0;
    bool aligned_axes = true;                 // lens/screen/camera on one axis

    void validate() const;
};

struct MirrorImage {
    double height_mm;    // virtual image height
    double distance_mm;  // virtual image distance behind the mirror
};

/// Point size -> physical cap height on screen (mm).
double cap_height_mm(const TextSpec& text, const ScreenSpec& screen);

/// Convex-mirror virtual image of an object of height h at distance d.
MirrorImage convex_mirror_image(double object_height_mm, double object_distance_mm,
                                double focal_length_mm);

/// Height in camera pixels of the reflection of an on-screen object.
double reflection_pixel_size(double object_height_mm, const Geometry& geom,
                             const GlassesSpec& glasses, const CameraSpec& cam);

/// Blur extent in pixels for an object displacement within one exposure.
double motion_blur_pixels(double displacement_mm, const Geometry& geom,
                          const GlassesSpec& glasses, const CameraSpec& cam);

/// Worst-case displacement (mm) of a sinusoidal tremor of the given peak
/// amplitude and frequency within one exposure window.
double tremor_displacement_mm(double amplitude_mm, double frequency_hz, double exposure_time_s);

/// Lens power in diopters from outer/inner surface radii (mm).
double lens_power_diopters(double outer_radius_mm, double inner_radius_mm, double refractive_index);

/// f/W from the vertical field of view and back.
double fw_from_fov(double fov_deg);
double fov_from_fw(double fw_ratio);

enum class ViewingMode { AllPage, Center };
enum class Axis { Horizontal, Vertical };

/// Symmetric head-rotation interval [-degrees, +degrees]; empty when the
/// aligned pose itself has no screen-lens-camera path.
struct AngleInterval {
    double degrees = 0.0;
    bool feasible = false;
};

/// Screen segment on the analyzed axis, in mm relative to the camera.
struct ScreenSegment {
    double below_mm;  // extent on the negative side
    double above_mm;  // extent on the positive side

    static ScreenSegment centered(double full_length_mm) {
        return {full_length_mm / 2.0, full_length_mm / 2.0};
    }
};

AngleInterval viewing_angle_range(const Geometry& geom, const GlassesSpec& glasses,
                                  const ScreenSegment& screen, ViewingMode mode, Axis axis);

/// One reference row for the head-offset calibration.
struct AngleReference {
    GlassesSpec glasses;
    Axis axis;
    ViewingMode mode;
    double screen_length_mm;  // camera-centered extent on the axis
    double reference_deg;     // published feasible half-range
};

/// Feasible-range references for two characterized lens pairs: a
/// low-curvature prescription-style lens (f=500mm) and a high-curvature
/// blue-light-filter lens (f=80mm), on a 380x190mm panel at 400mm.
std::vector<AngleReference> reference_viewing_angles();

struct HeadOffsetFit {
    double head_center_to_lens_mm;       // fitted value
    double rms_error_deg;
    std::vector<double> predicted_deg;   // per reference row
};

/// Fit the head-center-to-lens distance on [lo, hi] (default [60,120] mm,
/// 0.5mm grid) against reference viewing-angle ranges. The distance is not
/// directly measurable; reports carry the fitted value.
HeadOffsetFit calibrate_head_offset(const std::vector<AngleReference>& rows,
                                    double glass_screen_distance_mm,
                                    double lo_mm = 60.0, double hi_mm = 120.0,
                                    double step_mm = 0.5);

} // namespace glint::optics
