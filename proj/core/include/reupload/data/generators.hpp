#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "reupload/data/dataset.hpp"

namespace reupload::data {

// Per-coordinate class means: class 0 gets (2pi/16)(d mod 8), class 1 gets
// (2pi/16)(8 + (d mod 8)), both mod 2pi.
std::vector<double> class_means(int dim, int label);

// Balanced binary classification data, i.i.d. N(mean_d, sigma2) features.
Dataset gen_gaussian_means(int dim, std::size_t size, double sigma2,
                           std::uint64_t seed);

// Balanced linearly separable data: uniform on [-pi/2, pi/2]^D rejected
// until 1'x > margin*D (class 0) or 1'x < -margin*D (class 1).
Dataset gen_linsep(int dim, std::size_t size, double margin,
                   std::uint64_t seed);

// Regression targets f(x) = (1 + tanh sum(x)) / 2 on uniform [-1,1]^D.
Dataset gen_regression(int dim, std::size_t size, std::uint64_t seed);

// Shared covariance 0.8 on the diagonal and 0.792 off it; one dominant
// principal direction carries nearly all the variance.
Eigen::MatrixXd correlated_covariance(int dim);

// Balanced classification data with the class_means above and the strongly
// correlated covariance, sampled through its eigendecomposition.
Dataset gen_correlated(int dim, std::size_t size, std::uint64_t seed);

// Mean over coordinates of the per-coordinate sample variance; reported as
// the effective variance when comparing non-Gaussian data against the
// Gaussian-data depth bounds.
double effective_variance(const Dataset& ds);

}  // namespace reupload::data
