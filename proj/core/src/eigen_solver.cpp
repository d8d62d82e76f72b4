#include "maoea/eigen_solver.hpp"

#include "maoea/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace maoea {

namespace {

void check_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw ContractViolation("eigendecompose: matrix is not square");
  }
  const double scale = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  const double asym = a.size() == 0 ? 0.0 : (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw ContractViolation("eigendecompose: matrix is not symmetric");
  }
}

EigenSystem sorted_descending(const Eigen::VectorXd& values, const Eigen::MatrixXd& vectors) {
  const auto n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values[a] > values[b]; });
  EigenSystem out{Eigen::VectorXd(n), Eigen::MatrixXd(vectors.rows(), n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = values[order[static_cast<std::size_t>(i)]];
    out.vectors.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) {
        s += a(i, j) * a(i, j);
      }
    }
  }
  return std::sqrt(s);
}

} // namespace

EigenMethod parse_eigen_method(std::string_view name) {
  if (name == "jacobi") {
    return EigenMethod::kJacobi;
  }
  if (name == "tridiagonal" || name == "qr") {
    return EigenMethod::kTridiagonal;
  }
  throw std::invalid_argument("unknown eigen method '" + std::string(name) + "'");
}

std::string_view to_string(EigenMethod method) noexcept {
  return method == EigenMethod::kJacobi ? "jacobi" : "tridiagonal";
}

EigenSystem jacobi_eigen(const Eigen::MatrixXd& input, JacobiOptions options) {
  Eigen::MatrixXd a = input;
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double total = a.norm();
  const double target = options.tolerance * total;

  std::vector<double> col_p(static_cast<std::size_t>(n));
  std::vector<double> col_q(static_cast<std::size_t>(n));

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      break;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) {
          continue;
        }
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rotation zeroing a(p, q): t = tan(phi), the smaller root.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* ap = a.col(p).data();
        double* aq = a.col(q).data();
        for (Eigen::Index k = 0; k < n; ++k) {
          col_p[k] = c * ap[k] - s * aq[k];
          col_q[k] = s * ap[k] + c * aq[k];
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) {
            continue;
          }
          ap[k] = col_p[k];
          aq[k] = col_q[k];
          a(p, k) = col_p[k];
          a(q, k) = col_q[k];
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        double* vp = v.col(p).data();
        double* vq = v.col(q).data();
        for (Eigen::Index k = 0; k < n; ++k) {
          const double x = vp[k];
          const double y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }
  return sorted_descending(a.diagonal(), v);
}

EigenSystem eigendecompose(const Eigen::MatrixXd& a, EigenMethod method) {
  check_symmetric(a);
  if (method == EigenMethod::kJacobi) {
    return jacobi_eigen(a);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    // Rare non-convergence of the QR iteration; Jacobi always terminates.
    return jacobi_eigen(a);
  }
  return sorted_descending(solver.eigenvalues(), solver.eigenvectors());
}

} // namespace maoea
