#ifndef VECCOMP_ASYMPTOTICS_HPP
#define VECCOMP_ASYMPTOTICS_HPP

#include <vector>

#include "veccomp/multi_index.hpp"
#include "veccomp/numbers.hpp"

namespace veccomp {

/// Per-draw moments of the uniform distribution on a finite step set,
/// kept as exact rationals; doubles only appear at density evaluation.
struct GaussianModel {
  int dim = 0;
  long support_size = 0;
  std::vector<BigRat> mean;
  std::vector<std::vector<BigRat>> covariance;
};

GaussianModel uniform_moments(const std::vector<MultiIndex>& steps);

/// Central-limit approximation of the k-parts coefficient at `target` for the
/// indicator weight on `steps`: |S|^k times the normal density with mean k*mu
/// and covariance k*Sigma. Throws when Sigma is singular.
double clt_approx(long k, const MultiIndex& target,
                  const std::vector<MultiIndex>& steps);

// Printed diagonal asymptotics, evaluated verbatim.
double delannoy_diag_asymp(long l);
double unit_cube_diag_asymp(long l, int dim);
double one_two_cube_diag_asymp(long l, int dim);

// Exact rational determinant/inverse by Gauss-Jordan elimination.
BigRat rational_det(std::vector<std::vector<BigRat>> m);
std::vector<std::vector<BigRat>> rational_inverse(
    std::vector<std::vector<BigRat>> m);

}  // namespace veccomp

#endif
