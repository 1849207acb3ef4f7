#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquereg/corr_graph.hpp"
#include "cliquereg/gsp.hpp"

namespace cliquereg {

enum class MagnitudeMode { Abs, Squared };

/// Per-node sampling probabilities with provenance. `degenerate` is set when
/// the response carried no mass and the uniform fallback was used.
struct SamplingDistribution {
    Eigen::VectorXd pi;
    MagnitudeMode magnitude_mode = MagnitudeMode::Squared;
    std::string source;
    bool degenerate = false;
};

/// Drawn node subset. Without replacement the indices are distinct and appear
/// in draw order; `topped_up` records that the nonzero-probability nodes were
/// exhausted and the remainder came from a uniform draw over the rest.
struct SampleSelection {
    std::vector<int> indices;
    bool replacement = false;
    std::uint64_t seed = 0;
    bool topped_up = false;
};

/// pi_i proportional to |f_i| (abs) or f_i^2 (squared). A response with total
/// magnitude below 1e-12 yields the uniform distribution with the degenerate
/// flag set.
SamplingDistribution response_to_distribution(const Eigen::VectorXd& f, MagnitudeMode mode,
                                              std::string source = {});

/// Draws m nodes from dist. Without replacement this realizes sequential
/// weighted draws with renormalization after each pick, implemented as
/// exponential races (key_i = Exp(1)/pi_i, ascending) so the cost is flat in
/// m; identical in distribution to the naive sequential loop. With
/// replacement uses a Walker alias table. Deterministic given seed.
SampleSelection stochastic_sample(const SamplingDistribution& dist, int m, std::uint64_t seed,
                                  bool replacement);

/// Rows of the leading-k eigenvector block of a shift, the input to the
/// deterministic greedy selector. Splitting this from the selection loop lets
/// callers reuse one decomposition across sample counts.
Eigen::MatrixXd spectral_basis(const GraphShift& shift, int k);

/// One greedy step scan: grows the row set by the row maximizing the smallest
/// singular value of the stacked basis rows; ties within 1e-12 go to the
/// lowest row index.
SampleSelection greedy_sample_from_basis(const Eigen::MatrixXd& basis_rows, int m);

/// Deterministic spectral sampler: decompose, take the leading k = bandwidth
/// columns (defaults to m), then run the greedy smallest-singular-value scan.
SampleSelection greedy_deterministic_sample(const GraphShift& shift, int m,
                                            std::optional<int> bandwidth = std::nullopt);

/// Uniform draw of m distinct indices from [0, n).
SampleSelection random_sample(int n, int m, std::uint64_t seed);

/// Farthest-point traversal under the 6D Euclidean metric on (source, target)
/// coordinates. The first point is seeded (or forced via `start`).
SampleSelection fps_sample_6d(const CorrespondenceSet& corrs, int m, std::uint64_t seed,
                              std::optional<int> start = std::nullopt);

enum class XyzCombine { SourceOnly, TargetOnly, Both };

/// Per-node high-pass response magnitudes of the coordinate signals, each
/// family rescaled to [0, 1]. The shift is I - D^-1 A on a symmetrized
/// unit-weight kNN graph, so constant clouds respond exactly zero.
Eigen::VectorXd xyz_response_magnitudes(const CorrespondenceSet& corrs, int knn_k,
                                        XyzCombine combine);

/// Contour-style sampling distribution over the 6D correspondences built from
/// kNN graphs on the source and target clouds separately.
SamplingDistribution xyz_signal_distribution(const CorrespondenceSet& corrs, int knn_k,
                                             XyzCombine combine);

/// Closed-form expected squared reconstruction error of with-replacement
/// sampling with the scaled interpolation S_kk = 1/(m pi_k):
/// (1/m) * sum_i (1/pi_i - 1) f_i^2. `infinite` is set when some f_i != 0 has
/// pi_i = 0.
struct ReconstructionError {
    double value = 0.0;
    bool infinite = false;
};
ReconstructionError expected_reconstruction_error(const SamplingDistribution& dist,
                                                  const Eigen::VectorXd& f, int m = 1);

}  // namespace cliquereg
