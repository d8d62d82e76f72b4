#pragma once

#include <Eigen/Dense>

#include <string_view>

namespace maoea {

/// Spectrum of a symmetric matrix: eigenvalues descending, eigenvectors as
/// matching orthonormal columns.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

enum class EigenMethod {
  kJacobi,      // cyclic Jacobi sweeps (in-house)
  kTridiagonal, // Householder tridiagonalization + implicit QR (Eigen)
};

[[nodiscard]] EigenMethod parse_eigen_method(std::string_view name);
[[nodiscard]] std::string_view to_string(EigenMethod method) noexcept;

struct JacobiOptions {
  double tolerance = 1e-12; // stop when off-diagonal Frobenius <= tolerance * ||A||_F
  int max_sweeps = 100;
};

/// Cyclic-by-row Jacobi. Sweep order is fixed, so results are reproducible.
[[nodiscard]] EigenSystem jacobi_eigen(const Eigen::MatrixXd& a, JacobiOptions options = {});

/// Full symmetric eigendecomposition. Throws ContractViolation when `a` is not
/// square or |a_ij - a_ji| exceeds 1e-12 * max|a|. Equal eigenvalues keep the
/// column order produced by the solver.
[[nodiscard]] EigenSystem eigendecompose(const Eigen::MatrixXd& a,
                                         EigenMethod method = EigenMethod::kTridiagonal);

} // namespace maoea
