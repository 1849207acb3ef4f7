#pragma once

#include <stdexcept>
#include <string>

namespace cliquereg {

/// A pose hypothesis cannot be formed: fewer than 3 pairs, or the
/// cross-covariance is rank-deficient (e.g. collinear source points).
struct DegenerateCliqueError : std::runtime_error {
    explicit DegenerateCliqueError(const std::string& what)
        : std::runtime_error("degenerate_clique: " + what) {}
};

/// The pipeline found no clique of size >= 3 to seed a pose hypothesis.
struct InsufficientStructureError : std::runtime_error {
    explicit InsufficientStructureError(const std::string& what)
        : std::runtime_error("insufficient_structure: " + what) {}
};

/// A graph shift with zero spectral content where a nonzero one is required
/// (e.g. the Haar low-pass needs |lambda_max| > 0).
struct DegenerateShiftError : std::runtime_error {
    explicit DegenerateShiftError(const std::string& what)
        : std::runtime_error("degenerate_shift: " + what) {}
};

/// Eigendecomposition is unavailable (non-symmetric shift; Jordan bases are
/// not supported).
struct DecompositionError : std::runtime_error {
    explicit DecompositionError(const std::string& what)
        : std::runtime_error("decomposition: " + what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what)
        : std::runtime_error("io: " + what) {}
};

}  // namespace cliquereg
