#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "glint/channel.hpp"
#include "glint/metrics.hpp"
#include "glint/mfsr.hpp"
#include "glint/simulate.hpp"

namespace glint::assess {

struct TargetEntry {
    std::string group;   // G1 | G2 | G3
    std::string label;   // e.g. "G2 H1 (S1)"
    double point_size;
    double cap_height_mm;
};

/// Web-text target catalog: median popular-site sizes (G1), largest
/// popular-site sizes (G2), and big-font showcase sites (G3).
const std::vector<TargetEntry>& default_target_catalog();

struct AssessParams {
    double tau = 0.6;                                     // recognizability threshold
    std::vector<double> ladder_mm = {20.0, 14.0, 10.0, 7.0};
    std::vector<double> ladder_pt = {42, 56, 80, 102, 253, 340};  // S1..S6
    std::vector<double> camera_resolutions = {720, 1080, 2160};
    std::optional<double> bandwidth_kbps;                 // route through the channel when set
    std::vector<channel::Tier> tiers = channel::default_tiers();
};

struct SizeResult {
    double cap_mm;
    double point_size;      // 0 when driven by the mm ladder
    double cap_px;          // reflection pixel size
    double score;           // CWSSIM vs template
    bool recognizable;
};

struct AngleRow {
    std::string mode;   // all_page | center
    std::string axis;   // horizontal | vertical
    double degrees;
    bool feasible;
};

struct FactorPoint {
    double value;
    double score;
};

struct SweepResult {
    std::string factor;
    std::vector<FactorPoint> points;
    double pearson_r;
};

struct ThreatReport {
    std::vector<SizeResult> mm_ladder;
    std::vector<SizeResult> pt_ladder;
    std::optional<double> min_recognizable_mm;              // at the simulated camera
    std::map<int, double> min_recognizable_by_camera;       // N -> h(N)
    std::map<int, std::vector<std::string>> susceptible_labels_by_camera;
    std::map<int, std::set<std::string>> susceptible_groups_by_camera;
    std::vector<AngleRow> viewing_angles;
    double head_offset_mm = 0.0;        // calibrated head-center-to-lens distance
    double head_offset_rms_deg = 0.0;
    std::vector<SweepResult> sweeps;    // factor sweeps merged into the report
    double tau = 0.0;
    uint64_t seed = 0;
    nlohmann::json config_echo;
};

/// Full pipeline for one scene: synthesize -> (channel) -> MFSR -> CWSSIM
/// against the scene template.
struct PipelineScore {
    double score;
    double cap_px;
    bool unresolvable;
};
PipelineScore pipeline_score(const sim::SceneConfig& scene, const mfsr::MfsrParams& params,
                             std::optional<double> bandwidth_kbps = std::nullopt,
                             const std::vector<channel::Tier>& tiers = channel::default_tiers());

/// Sweep one factor across values; returns CWSSIM series and its Pearson
/// correlation with the factor.
SweepResult factor_sweep(const sim::SceneConfig& scene, const mfsr::MfsrParams& params,
                         const std::string& factor, const std::vector<double>& values);

const std::vector<std::string>& sweepable_factors();

/// Individual reflection assessment: size ladders, recognizability threshold,
/// camera extrapolation, target-group mapping, viewing angles.
ThreatReport run_assessment(const sim::SceneConfig& scene, const mfsr::MfsrParams& mfsr_params,
                            const AssessParams& params);

struct WebsiteCorrelation {
    double mean_r;  // rank vs mean pixel value
    double std_r;   // rank vs pixel standard deviation
};

/// Correlate website recognition-easiness ranks with image pixel statistics.
WebsiteCorrelation website_susceptibility(const std::vector<Image>& images,
                                          const std::vector<double>& easiness_ranks);

nlohmann::json to_json(const ThreatReport& report);
std::string ladder_csv(const ThreatReport& report);
std::string sweep_csv(const SweepResult& sweep);

} // namespace glint::assess
