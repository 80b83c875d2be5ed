#include "cyclecodes/psd.hpp"

#include <Eigen/Dense>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::certs {

double min_eigenvalue(std::span<const double> matrix, std::size_t dim) {
  if (dim == 0 || matrix.size() != dim * dim) throw DomainError("matrix is not square");
  const auto m = static_cast<Eigen::Index>(dim);
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
      matrix.data(), m, m);
  const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigen-solve failed");
  return solver.eigenvalues().minCoeff();
}

bool psd_check(std::span<const double> matrix, std::size_t dim, double tol) {
  return min_eigenvalue(matrix, dim) >= -tol;
}

}  // namespace cyclecodes::certs
