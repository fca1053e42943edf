#include "veccomp/asymptotics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace veccomp {

GaussianModel uniform_moments(const std::vector<MultiIndex>& steps) {
  if (steps.empty()) throw std::invalid_argument("empty step set");
  std::set<MultiIndex> unique(steps.begin(), steps.end());
  const int n = steps.front().dim();
  for (const auto& s : unique)
    if (s.dim() != n) throw std::invalid_argument("step dimension mismatch");

  GaussianModel model;
  model.dim = n;
  model.support_size = static_cast<long>(unique.size());
  BigRat inv_size(1, model.support_size);
  inv_size.canonicalize();

  model.mean.assign(static_cast<size_t>(n), BigRat(0));
  for (const auto& s : unique)
    for (int i = 0; i < n; ++i) model.mean[static_cast<size_t>(i)] += s[i];
  for (auto& m : model.mean) {
    m *= inv_size;
    m.canonicalize();
  }

  model.covariance.assign(static_cast<size_t>(n),
                          std::vector<BigRat>(static_cast<size_t>(n), BigRat(0)));
  for (const auto& s : unique)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        model.covariance[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            BigRat(s[i] * s[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& c = model.covariance[static_cast<size_t>(i)][static_cast<size_t>(j)];
      c *= inv_size;
      c -= model.mean[static_cast<size_t>(i)] * model.mean[static_cast<size_t>(j)];
      c.canonicalize();
    }
  return model;
}

BigRat rational_det(std::vector<std::vector<BigRat>> m) {
  const std::size_t n = m.size();
  BigRat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return BigRat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    det.canonicalize();
    BigRat inv_pivot = BigRat(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) {
      m[col][j] *= inv_pivot;
      m[col][j].canonicalize();
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      BigRat factor = m[row][col];
      for (std::size_t j = col; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        m[row][j].canonicalize();
      }
    }
  }
  return det;
}

std::vector<std::vector<BigRat>> rational_inverse(
    std::vector<std::vector<BigRat>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, BigRat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular covariance matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    BigRat inv_pivot = BigRat(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= inv_pivot;
      inv[col][j] *= inv_pivot;
      m[col][j].canonicalize();
      inv[col][j].canonicalize();
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      BigRat factor = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
        m[row][j].canonicalize();
        inv[row][j].canonicalize();
      }
    }
  }
  return inv;
}

double clt_approx(long k, const MultiIndex& target,
                  const std::vector<MultiIndex>& steps) {
  if (k < 1) throw std::invalid_argument("clt approximation needs k >= 1");
  GaussianModel model = uniform_moments(steps);
  if (target.dim() != model.dim)
    throw std::invalid_argument("target dimension does not match step set");
  const int n = model.dim;

  BigRat det = rational_det(model.covariance);
  if (det <= 0) throw std::invalid_argument("singular covariance matrix");
  auto inverse = rational_inverse(model.covariance);

  std::vector<BigRat> diff(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    diff[static_cast<size_t>(i)] =
        BigRat(target[i]) - BigRat(k) * model.mean[static_cast<size_t>(i)];
    diff[static_cast<size_t>(i)].canonicalize();
  }
  // (l - k mu)^T (k Sigma)^{-1} (l - k mu) = diff^T Sigma^{-1} diff / k
  BigRat quad(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      quad += diff[static_cast<size_t>(i)] *
              inverse[static_cast<size_t>(i)][static_cast<size_t>(j)] *
              diff[static_cast<size_t>(j)];
  quad /= k;
  quad.canonicalize();

  // det(k Sigma) = k^n det(Sigma); evaluate in log space.
  double log_value = k * std::log(static_cast<double>(model.support_size)) -
                     0.5 * n * std::log(2.0 * M_PI) -
                     0.5 * (n * std::log(static_cast<double>(k)) +
                            std::log(det.get_d())) -
                     0.5 * quad.get_d();
  return std::exp(log_value);
}

double delannoy_diag_asymp(long l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  const double L = std::sqrt(2.0);
  const double x0 = L - 1.0;
  return std::pow(x0, -2.0 * static_cast<double>(l)) *
         std::sqrt(1.0 / (L * (2.0 - L) * (2.0 - L) * 2.0 * M_PI *
                          static_cast<double>(l)));
}

double unit_cube_diag_asymp(long l, int dim) {
  if (l < 1 || dim < 1) throw std::invalid_argument("need l >= 1 and dim >= 1");
  const double n = dim;
  const double t = std::pow(2.0, 1.0 / n) - 1.0;
  return std::pow(t, -n * static_cast<double>(l)) /
         (t * std::pow(2.0, (n * n - 1.0) / (2.0 * n)) *
          std::sqrt(n * std::pow(M_PI * static_cast<double>(l), n - 1.0)));
}

double one_two_cube_diag_asymp(long l, int dim) {
  if (l < 1 || dim < 1) throw std::invalid_argument("need l >= 1 and dim >= 1");
  const double n = dim;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double A =
      -std::pow(phi, n - 1.0) * std::pow(1.0 + phi, n - 1.0) * (1.0 + 2.0 * phi);
  const double h =
      n * std::pow(phi / (1.0 + 3.0 * phi + 2.0 * phi * phi), n - 1.0);
  const double b0 =
      1.0 / (-phi * A * std::sqrt(std::pow(2.0 * M_PI, n - 1.0) * h));
  return std::pow(phi, -static_cast<double>(l) * n) * b0 *
         std::pow(static_cast<double>(l), (1.0 - n) / 2.0);
}

}  // namespace veccomp
