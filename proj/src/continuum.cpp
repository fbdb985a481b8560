#include "oscwalk/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscwalk {

double mean_curve(double x, double y0) { return x * (1.0 - x) + y0 * (1.0 - x) * (1.0 - x); }

double fluctuation_variance(double x, double y0) {
  const double omx = 1.0 - x;
  return 2.0 * x * x * omx * omx + 2.0 * y0 * x * (2.0 - 3.0 * x) * omx * omx -
         4.0 * y0 * y0 * x * omx * omx * omx;
}

double covariance_kernel(double x1, double x2) {
  const double lo = std::min(x1, x2);
  const double hi = std::max(x1, x2);
  return 2.0 * lo * lo * (1.0 - hi) * (1.0 - hi);
}

namespace {

void check_grid(std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("covariance grid: empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0 && points[i] < 1.0))
      throw std::invalid_argument("covariance grid: points must lie strictly in (0,1)");
    if (i > 0 && !(points[i] > points[i - 1]))
      throw std::invalid_argument("covariance grid: points must be strictly increasing");
  }
}

// z_{a,b} = 2 (x_b - x_a)(x_b - 2 x_a x_b + x_a) for x_a < x_b.
double z_factor(double xa, double xb) { return 2.0 * (xb - xa) * (xb - 2.0 * xa * xb + xa); }

}  // namespace

Eigen::MatrixXd covariance_matrix(std::span<const double> points) {
  check_grid(points);
  const int n = static_cast<int>(points.size());
  Eigen::MatrixXd c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = covariance_kernel(points[i], points[j]);
  return c;
}

CovarianceMatrixAnalysis covariance_matrix_analysis(std::span<const double> points) {
  check_grid(points);
  const int n = static_cast<int>(points.size());
  CovarianceMatrixAnalysis out;
  out.matrix = covariance_matrix(points);

  // det C_(n) = c_{1,n} prod_{i=2..n} z_{i-1,i}, with c_{1,n} = 2 x_1^2 (1-x_n)^2.
  double det = 2.0 * points[0] * points[0] * (1.0 - points[n - 1]) * (1.0 - points[n - 1]);
  for (int i = 1; i < n; ++i) det *= z_factor(points[i - 1], points[i]);
  out.lemma_det = det;

  // Inverse built by appending one point at a time: pad the previous inverse
  // with zeros, then add the 2x2 block M on the last two indices.
  Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(1, 1);
  inv(0, 0) = 1.0 / (2.0 * points[0] * points[0] * (1.0 - points[0]) * (1.0 - points[0]));
  for (int m = 2; m <= n; ++m) {
    Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(m, m);
    grown.topLeftCorner(m - 1, m - 1) = inv;
    const double xp = points[m - 2];
    const double xn = points[m - 1];
    const double z = z_factor(xp, xn);
    const double omp = 1.0 - xp;
    const double omn = 1.0 - xn;
    grown(m - 2, m - 2) += (omn * omn) / (omp * omp * z);
    grown(m - 2, m - 1) += -1.0 / z;
    grown(m - 1, m - 2) += -1.0 / z;
    grown(m - 1, m - 1) += (omp * omp) / (omn * omn * z);
    inv = std::move(grown);
  }
  out.lemma_inverse = inv;

  Eigen::FullPivLU<Eigen::MatrixXd> lu(out.matrix);
  out.direct_det = lu.determinant();
  out.direct_inverse = lu.inverse();
  out.min_eigenvalue =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(out.matrix).eigenvalues().minCoeff();
  out.max_identity_residual =
      (out.lemma_inverse * out.matrix - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return out;
}

double surface_tension(double v, double p, double q) {
  if (!(v >= -1.0 && v <= 1.0)) throw std::domain_error("surface_tension: v outside [-1, 1]");
  if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("surface_tension: weights must be positive");
  const auto xlogx = [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; };
  const double a = 0.5 * (1.0 + v);
  const double b = 0.5 * (1.0 - v);
  return a * std::log(p) + b * std::log(q) - xlogx(a) - xlogx(b);
}

double ode_residual(double h, double h_prime, double h_second) {
  return 2.0 * h * h_second - h_prime * h_prime + 1.0;
}

std::vector<double> ode_residual_on_grid(std::span<const double> h, double step) {
  if (h.size() < 3) throw std::invalid_argument("ode_residual_on_grid: need at least 3 points");
  std::vector<double> out(h.size() - 2);
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    const double hp = (h[i + 1] - h[i - 1]) / (2.0 * step);
    const double hpp = (h[i + 1] - 2.0 * h[i] + h[i - 1]) / (step * step);
    out[i - 1] = ode_residual(h[i], hp, hpp);
  }
  return out;
}

std::vector<double> apply_delta_operator(std::span<const double> f, double x0, double step) {
  if (f.size() < 5) throw std::invalid_argument("apply_delta_operator: grid too coarse (need >= 5 points)");
  if (!(step > 0.0)) throw std::invalid_argument("apply_delta_operator: step must be positive");
  const double x_last = x0 + step * static_cast<double>(f.size() - 1);
  if (!(x0 > 0.0 && x_last < 1.0))
    throw std::invalid_argument("apply_delta_operator: grid must lie strictly inside (0,1)");

  std::vector<double> out(f.size() - 2);
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    const double x = x0 + step * static_cast<double>(i);
    const double omx = 1.0 - x;
    const double fp = (f[i + 1] - f[i - 1]) / (2.0 * step);
    const double fpp = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (step * step);
    out[i - 1] = -fpp / (2.0 * x * omx) + (1.0 - 2.0 * x) * fp / (2.0 * x * x * omx * omx) +
                 f[i] / (x * x * omx * omx);
  }
  return out;
}

}  // namespace oscwalk
