#pragma once

#include <Eigen/Core>

#include "cliquereg/corr_graph.hpp"

namespace cliquereg {

/// Weighted adjacency operator scaled so its spectral norm is 1
/// (0 for the zero matrix).
struct GraphShift {
    Eigen::MatrixXd a;
    double spectral_norm = 0.0;
};

/// Eigendecomposition of a symmetric shift, eigenvalues in descending order.
/// For symmetric shifts the eigenbasis is orthonormal, so inverse = V^T.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd v;
    Eigen::MatrixXd v_inv;
};

enum class FilterKind { HaarHigh, HaarLow, AllPass, Laplacian };

/// Linear graph filter. Haar and all-pass kinds hold the dense operator in
/// `op`. The Laplacian kind keeps the edge weights in `op` and the degree
/// signal in `diag`, and applies itself as sum_j w_ij (x_i - x_j); that form
/// annihilates constant signals exactly and never needs a spectrum.
struct GraphFilter {
    FilterKind kind = FilterKind::AllPass;
    Eigen::MatrixXd op;
    Eigen::VectorXd diag;

    /// Dense operator matrix (materialized on demand for the Laplacian kind).
    Eigen::MatrixXd matrix() const;
};

/// Scales a square matrix by its largest singular value. Zero matrix maps to
/// zero with spectral_norm 0. Throws std::invalid_argument on non-square input.
GraphShift normalize_shift(const Eigen::MatrixXd& raw);

/// Symmetric eigendecomposition with the descending eigenvalue convention.
/// Throws DecompositionError for non-symmetric shifts (Jordan bases are out
/// of scope).
SpectralDecomposition decompose(const GraphShift& shift);

Eigen::VectorXd gft(const SpectralDecomposition& dec, const Eigen::VectorXd& x);
Eigen::VectorXd inverse_gft(const SpectralDecomposition& dec, const Eigen::VectorXd& spectrum);
Eigen::VectorXd gft(const GraphShift& shift, const Eigen::VectorXd& x);
Eigen::VectorXd inverse_gft(const GraphShift& shift, const Eigen::VectorXd& spectrum);

/// I - A. Frequency response 1 - lambda_i, nondecreasing in the descending
/// eigenvalue order.
GraphFilter haar_high_pass(const GraphShift& shift);

/// I + A / |lambda_max|. Throws DegenerateShiftError when |lambda_max| = 0.
GraphFilter haar_low_pass(const GraphShift& shift);

/// Identity filter of the given size.
GraphFilter all_pass(int n);

/// Diag(s) - W_SOG built from the graph's second-order weights and degree
/// signal; the response at node i is the gap between s_i x_i and the
/// neighborhood combination.
GraphFilter laplacian_filter(const CompatibilityGraph& g);

Eigen::VectorXd apply_filter(const GraphFilter& f, const Eigen::VectorXd& x);

}  // namespace cliquereg
