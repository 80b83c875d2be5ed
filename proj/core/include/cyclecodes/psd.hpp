#pragma once

#include <cstddef>
#include <span>

namespace cyclecodes::certs {

/// Smallest eigenvalue of the symmetric part of a dim x dim row-major matrix.
/// Throws DomainError if the span is not dim^2 long.
double min_eigenvalue(std::span<const double> matrix, std::size_t dim);

/// min_eigenvalue >= -tol.
bool psd_check(std::span<const double> matrix, std::size_t dim, double tol);

}  // namespace cyclecodes::certs
