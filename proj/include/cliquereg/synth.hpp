#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliquereg/corr_graph.hpp"
#include "cliquereg/registration.hpp"

namespace cliquereg {

enum class OutlierMode { UniformBox, ShuffledTargets };

/// Synthetic registration scene description. Source points are uniform in an
/// axis-aligned cube of side 10 centered at the origin, so the default
/// compatibility scale d_cmp = 0.1 stays discriminative.
struct SceneSpec {
    int n_points = 100;
    double inlier_ratio = 1.0;
    double noise_sigma = 0.0;
    RigidTransform transform;
    OutlierMode outlier_mode = OutlierMode::ShuffledTargets;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Scene {
    CorrespondenceSet corrs;
    RigidTransform ground_truth;
    std::vector<bool> inlier_mask;
};

/// Inliers are (p, R p + t + N(0, sigma^2)); the inlier count is exactly
/// round(inlier_ratio * n). Shuffled-target outliers get their true targets
/// deranged among themselves (a single outlier falls back to a box draw).
/// Fully deterministic given the spec.
Scene generate_scene(const SceneSpec& spec);

/// Connected caveman layout: num_cliques cliques of clique_size nodes each.
struct CavemanSpec {
    int num_cliques = 2;
    int clique_size = 3;

    void validate() const;
};

/// Unit-weight connected caveman graph: complete blocks joined in a cycle by
/// rewiring one edge per block. In block c the edge (a_c, b_c) is removed and
/// a_c is attached to the receiver node z of block c-1; without a seed,
/// a = block[0], b = block[1], z = block[last]. A seeded call picks (a, b, z)
/// distinct at random per block, which preserves the degree classes
/// {s-2, s-1, s} and connectivity.
CompatibilityGraph connected_caveman(const CavemanSpec& spec,
                                     std::optional<std::uint64_t> rewire_seed = std::nullopt);

/// Pairs every source point with the target whose feature vector is nearest
/// in L2 (ties to the lower target index).
CorrespondenceSet nn_match(const std::vector<Eigen::VectorXd>& features_source,
                           const std::vector<Eigen::VectorXd>& features_target,
                           const std::vector<Eigen::Vector3d>& points_source,
                           const std::vector<Eigen::Vector3d>& points_target);

/// Uniformly random rotation (quaternion method) and translation in
/// [-box_half, box_half]^3, derived from the seed.
RigidTransform random_transform(std::uint64_t seed, double box_half = 5.0);

}  // namespace cliquereg
