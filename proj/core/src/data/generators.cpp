#include "reupload/data/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reupload/rng.hpp"

namespace reupload::data {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_balanced_request(int dim, std::size_t size, int min_dim) {
  if (dim < min_dim) throw std::invalid_argument("feature dimension too small");
  if (size % 2 != 0) {
    throw std::invalid_argument("balanced dataset needs an even size");
  }
}

}  // namespace

std::vector<double> class_means(int dim, int label) {
  if (dim < 1) throw std::invalid_argument("feature dimension must be >= 1");
  if (label != 0 && label != 1) {
    throw std::invalid_argument("label must be 0 or 1");
  }
  std::vector<double> mu(dim);
  for (int d = 0; d < dim; ++d) {
    const int step = (label == 0) ? d % 8 : 8 + d % 8;
    mu[d] = std::fmod(kTwoPi / 16.0 * step, kTwoPi);
  }
  return mu;
}

Dataset gen_gaussian_means(int dim, std::size_t size, double sigma2,
                           std::uint64_t seed) {
  check_balanced_request(dim, size, 1);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("variance must be positive");
  const double sigma = std::sqrt(sigma2);

  Rng rng = derive_stream(seed, "data");
  Dataset ds;
  ds.dim = dim;
  ds.samples.reserve(size);
  for (int label = 0; label < 2; ++label) {
    const auto mu = class_means(dim, label);
    for (std::size_t m = 0; m < size / 2; ++m) {
      Sample s;
      s.label = label;
      s.features.resize(dim);
      for (int d = 0; d < dim; ++d) {
        s.features[d] = rng.gaussian(mu[d], sigma);
      }
      ds.samples.push_back(std::move(s));
    }
  }
  return ds;
}

Dataset gen_linsep(int dim, std::size_t size, double margin,
                   std::uint64_t seed) {
  check_balanced_request(dim, size, 1);
  if (margin >= std::numbers::pi / 2.0) {
    throw std::invalid_argument("margin leaves an empty acceptance region");
  }
  if (margin < 0.0) throw std::invalid_argument("margin must be nonnegative");

  Rng rng = derive_stream(seed, "data");
  const double half_pi = std::numbers::pi / 2.0;
  const double threshold = margin * dim;

  Dataset ds;
  ds.dim = dim;
  ds.samples.reserve(size);
  for (int label = 0; label < 2; ++label) {
    const double sign = (label == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < size / 2; ++m) {
      Sample s;
      s.label = label;
      s.features.resize(dim);
      for (;;) {
        double sum = 0.0;
        for (int d = 0; d < dim; ++d) {
          s.features[d] = rng.uniform(-half_pi, half_pi);
          sum += s.features[d];
        }
        if (sign * sum > threshold) break;
      }
      ds.samples.push_back(std::move(s));
    }
  }
  return ds;
}

Dataset gen_regression(int dim, std::size_t size, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("feature dimension must be >= 1");
  Rng rng = derive_stream(seed, "data");
  Dataset ds;
  ds.dim = dim;
  ds.samples.reserve(size);
  for (std::size_t m = 0; m < size; ++m) {
    Sample s;
    s.features.resize(dim);
    double sum = 0.0;
    for (int d = 0; d < dim; ++d) {
      s.features[d] = rng.uniform(-1.0, 1.0);
      sum += s.features[d];
    }
    s.label = 0.5 * (1.0 + std::tanh(sum));
    ds.samples.push_back(std::move(s));
  }
  return ds;
}

Eigen::MatrixXd correlated_covariance(int dim) {
  if (dim < 2) throw std::invalid_argument("need at least two dimensions");
  Eigen::MatrixXd cov = Eigen::MatrixXd::Constant(dim, dim, 0.792);
  cov.diagonal().setConstant(0.8);
  return cov;
}

Dataset gen_correlated(int dim, std::size_t size, std::uint64_t seed) {
  check_balanced_request(dim, size, 2);
  const Eigen::MatrixXd cov = correlated_covariance(dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.eigenvalues().minCoeff() < -1e-12) {
    throw std::runtime_error("covariance is not positive semidefinite");
  }
  const Eigen::MatrixXd transform =
      es.eigenvectors() *
      es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

  Rng rng = derive_stream(seed, "data");
  Dataset ds;
  ds.dim = dim;
  ds.samples.reserve(size);
  Eigen::VectorXd z(dim);
  for (int label = 0; label < 2; ++label) {
    const auto mu = class_means(dim, label);
    for (std::size_t m = 0; m < size / 2; ++m) {
      for (int d = 0; d < dim; ++d) z(d) = rng.gaussian();
      const Eigen::VectorXd x = transform * z;
      Sample s;
      s.label = label;
      s.features.resize(dim);
      for (int d = 0; d < dim; ++d) s.features[d] = mu[d] + x(d);
      ds.samples.push_back(std::move(s));
    }
  }
  return ds;
}

double effective_variance(const Dataset& ds) {
  if (ds.size() < 2) throw std::invalid_argument("need at least two samples");
  const double m = static_cast<double>(ds.size());
  double total = 0.0;
  for (int d = 0; d < ds.dim; ++d) {
    double mean = 0.0;
    for (const auto& s : ds.samples) mean += s.features[d];
    mean /= m;
    double var = 0.0;
    for (const auto& s : ds.samples) {
      const double c = s.features[d] - mean;
      var += c * c;
    }
    total += var / (m - 1.0);
  }
  return total / ds.dim;
}

}  // namespace reupload::data
