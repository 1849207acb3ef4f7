#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquereg/clique.hpp"
#include "cliquereg/corr_graph.hpp"
#include "cliquereg/sampling.hpp"

namespace cliquereg {

/// Proper rigid motion: rotation (det +1) plus translation.
struct RigidTransform {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }
};

/// Wall-clock milliseconds per pipeline stage. Sampling covers the full-set
/// graph build, filtering and the draw; GC is the graph the clique search
/// runs on (the sampled rebuild, or the single build at ratio 1).
struct StageTimings {
    double sampling_ms = 0.0;
    double gc_ms = 0.0;
    double mcs_ms = 0.0;
    double ncs_ms = 0.0;
    double pe_ms = 0.0;

    double total() const { return sampling_ms + gc_ms + mcs_ms + ncs_ms + pe_ms; }
};

struct ResultFlags {
    bool truncated_cliques = false;
    bool degenerate_distribution = false;
    bool insufficient_structure = false;
};

struct RegistrationResult {
    RigidTransform transform;
    double best_score = 0.0;
    int hypothesis_count = 0;
    StageTimings stage_timings;
    ResultFlags flags;
};

enum class SamplerKind { Degree, Random, Fps, Xyz, Greedy };
enum class FilterChoice { Laplacian, HaarHigh, LowPass, AllPass };
enum class ScoreMetric { InlierCount, TruncatedMae };

struct PipelineConfig {
    double ratio = 1.0;
    std::uint64_t seed = 0;
    GraphConfig graph_cfg;
    SamplerKind sampler = SamplerKind::Degree;
    FilterChoice filter = FilterChoice::Laplacian;
    MagnitudeMode magnitude_mode = MagnitudeMode::Squared;
    double inlier_threshold = 0.1;
    CliqueBudget budget;
    ScoreMetric score_metric = ScoreMetric::InlierCount;
    /// Weight Procrustes pairs by their clique edge-weight mass instead of
    /// equally.
    bool clique_edge_weights = false;
    int knn_k = 10;
    int threads = 1;

    void validate() const;
};

/// Weighted orthogonal Procrustes: minimizes sum w_i |R p_s + t - p_t|^2 with
/// the reflection corrected to det +1. Throws DegenerateCliqueError for fewer
/// than 3 pairs or a rank-deficient cross-covariance.
RigidTransform estimate_pose_svd(const CorrespondenceSet& corrs,
                                 const std::vector<double>* weights = nullptr);

/// Consensus score of a hypothesis over a correspondence set: the inlier
/// count |R p_s + t - p_t| <= threshold, or the truncated-MAE variant
/// sum max(0, 1 - d_i/threshold) (continuous, still in [0, N]).
double hypothesis_score(const RigidTransform& tf, const CorrespondenceSet& full_corrs,
                        double inlier_threshold,
                        ScoreMetric metric = ScoreMetric::InlierCount);

/// Sampling distribution for the configured filter on the degree signal, or
/// the xyz contour distribution. Exposed for the sample command and sweeps.
SamplingDistribution pipeline_distribution(const CompatibilityGraph& g,
                                           const CorrespondenceSet& corrs,
                                           const PipelineConfig& cfg);

/// End-to-end registration: build the full graph, filter the degree signal,
/// draw m = max(3, ceil(ratio N)) nodes, rebuild on the subset, enumerate and
/// select cliques, then score every clique hypothesis against the FULL input
/// set and keep the best (higher score, then lower clique lexicographic
/// order). Throws InsufficientStructureError when no clique of size >= 3
/// yields a hypothesis.
RegistrationResult register_correspondences(const CorrespondenceSet& corrs,
                                            const PipelineConfig& cfg);

const char* to_string(SamplerKind s);
const char* to_string(FilterChoice f);
std::optional<SamplerKind> sampler_from_string(const std::string& name);
std::optional<FilterChoice> filter_from_string(const std::string& name);

}  // namespace cliquereg
