#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace oscwalk {

// Concentration curve of the scaled walk: x(1-x) + y0(1-x)^2.
double mean_curve(double x, double y0);

// Variance of the scaled fluctuation field at x. For y0 = 0 this is
// 2x^2(1-x)^2; the general form adds the y0 and y0^2 corrections.
double fluctuation_variance(double x, double y0);

// Limit covariance of the fluctuation field: 2 min^2 (1-max)^2.
double covariance_kernel(double x1, double x2);

// Kernel matrix on strictly increasing interior points; throws
// std::invalid_argument on a degenerate grid.
Eigen::MatrixXd covariance_matrix(std::span<const double> points);

struct CovarianceMatrixAnalysis {
  Eigen::MatrixXd matrix;
  double lemma_det = 0.0;             // c_{1,n} prod z_{i-1,i}
  double direct_det = 0.0;            // LU determinant of the matrix
  Eigen::MatrixXd lemma_inverse;      // tridiagonal assembly from 2x2 blocks
  Eigen::MatrixXd direct_inverse;     // LU inverse of the matrix
  double min_eigenvalue = 0.0;
  double max_identity_residual = 0.0;  // max abs entry of lemma_inverse*matrix - I
};

// Evaluates both the closed-form determinant/inverse recurrences for the
// kernel matrix and their direct numerical counterparts.
CovarianceMatrixAnalysis covariance_matrix_analysis(std::span<const double> points);

// Exponential growth rate of weighted +-1 path counts at slope v, weights
// (p, q); end-point slopes use the 0 log 0 = 0 convention.
double surface_tension(double v, double p, double q);

// Residual of 2 h h'' - (h')^2 + 1 at a point, given h and two derivatives.
double ode_residual(double h, double h_prime, double h_second);
// Same residual on a uniform grid with central-difference derivatives;
// returns values for the interior points (size - 2 entries).
std::vector<double> ode_residual_on_grid(std::span<const double> h, double step);

// Second-variation operator
//   (Delta f)(x) = -f''/(2x(1-x)) + (1-2x) f' / (2x^2(1-x)^2) + f / (x^2(1-x)^2)
// discretized with central differences on a uniform grid starting at x0.
// Returns values for the interior points; requires at least 5 grid points,
// all strictly inside (0,1).
std::vector<double> apply_delta_operator(std::span<const double> f, double x0, double step);

}  // namespace oscwalk
