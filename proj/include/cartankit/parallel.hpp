#pragma once

#include "cartankit/cartan.hpp"

namespace cartankit {

/// OpenMP kernels. Every kernel has a serial reference implementation whose
/// output it must match bit for bit; the test suite compares them and
/// tools/bench.cpp times them against each other. Builds without OpenMP fall
/// back to the serial path.

/// Row-parallel exact product; reference is mat_mul.
Matrix mat_mul_parallel(const Matrix& a, const Matrix& b);

/// validate(d, true) parallelizes the Jacobiator sweep; reference is
/// validate(d, false). This wrapper exists for symmetry with the other
/// kernels.
ValidationReport validate_parallel(const CartanData& d);

/// Independent datasets validated by concurrent workers, reports in input
/// order; reference is a serial loop over validate().
std::vector<ValidationReport> batch_validate(const std::vector<CartanData>& datasets);

std::size_t worker_count();

}  // namespace cartankit
