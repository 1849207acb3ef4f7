#pragma once

#include <Eigen/Core>
#include <vector>

namespace cliquereg {

/// A matched pair of 3D points: source xyz and target uvw, one 6-vector.
struct Correspondence {
    Eigen::Vector3d source;
    Eigen::Vector3d target;
};

/// Ordered correspondence set; node index i in every graph equals index i here.
struct CorrespondenceSet {
    std::vector<Correspondence> items;

    int size() const { return static_cast<int>(items.size()); }
    const Correspondence& operator[](int i) const { return items[static_cast<std::size_t>(i)]; }
    Correspondence& operator[](int i) { return items[static_cast<std::size_t>(i)]; }

    CorrespondenceSet subset(const std::vector<int>& indices) const;
};

/// Compatibility-graph hyperparameters. d_cmp is the compatibility length
/// scale, t the edge-admission threshold.
struct GraphConfig {
    double d_cmp = 0.1;
    double t = 0.999;

    void validate() const;
};

/// First-order weights w, second-order weights w_sog = w .* (w * w), and the
/// generalized degree signal (row sums of w_sog). Both matrices are symmetric
/// with zero diagonal.
struct CompatibilityGraph {
    int n = 0;
    Eigen::MatrixXd w;
    Eigen::MatrixXd w_sog;
    Eigen::VectorXd degree;
};

/// | ||pi_s - pj_s|| - ||pi_t - pj_t|| |; zero for rigid-consistent pairs.
double compatibility_distance(const Correspondence& ci, const Correspondence& cj);

/// 1 - S_dist^2 / (2 d_cmp^2) when that exceeds t, else 0.
double edge_weight(const Correspondence& ci, const Correspondence& cj, const GraphConfig& cfg);

/// Builds w pairwise, w_sog = w .* (w*w) with zero diagonal, and the degree
/// signal. Only entries with w > 0 can carry second-order weight, so w_sog is
/// computed per edge (deterministic for any thread count).
CompatibilityGraph build_graph(const CorrespondenceSet& corrs, const GraphConfig& cfg,
                               int threads = 1);

/// Unit-weight graph from a plain adjacency matrix: w = w_sog = adjacency,
/// degree = row sums. Used for crafted graphs (caveman suites and tests).
CompatibilityGraph graph_from_adjacency(const Eigen::MatrixXd& adjacency);

}  // namespace cliquereg
