#include "cartankit/parallel.hpp"

#ifdef CARTANKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace cartankit {

Matrix mat_mul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw shape_error("matrix product inner dimensions differ");
  Matrix m(a.rows(), b.cols());
#ifdef CARTANKIT_HAVE_OPENMP
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(a.rows()); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(static_cast<std::size_t>(i), k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        m.at(static_cast<std::size_t>(i), j) += aik * b.at(k, j);
    }
  }
  return m;
#else
  return mat_mul(a, b);
#endif
}

ValidationReport validate_parallel(const CartanData& d) { return validate(d, true); }

std::vector<ValidationReport> batch_validate(const std::vector<CartanData>& datasets) {
  std::vector<ValidationReport> reports(datasets.size());
#ifdef CARTANKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(datasets.size()); ++i)
    reports[static_cast<std::size_t>(i)] = validate(datasets[static_cast<std::size_t>(i)]);
#else
  for (std::size_t i = 0; i < datasets.size(); ++i) reports[i] = validate(datasets[i]);
#endif
  return reports;
}

std::size_t worker_count() {
#ifdef CARTANKIT_HAVE_OPENMP
  return static_cast<std::size_t>(omp_get_max_threads());
#else
  return 1;
#endif
}

}  // namespace cartankit
