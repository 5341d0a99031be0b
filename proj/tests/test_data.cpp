#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "reupload/data/csv.hpp"
#include "reupload/data/generators.hpp"
#include "reupload/data/idx.hpp"
#include "reupload/data/quantize.hpp"

using namespace reupload;

namespace {
const double kPi = 3.14159265358979323846;

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void put_u32be(std::ofstream& out, std::uint32_t v) {
  char b[4] = {char(v >> 24), char(v >> 16), char(v >> 8), char(v)};
  out.write(b, 4);
}
}  // namespace

TEST_CASE("class means walk the circle in sixteenths") {
  auto m0 = data::class_means(10, 0);
  auto m1 = data::class_means(10, 1);
  for (int d = 0; d < 10; ++d) {
    CHECK(m0[d] == doctest::Approx((2 * kPi / 16) * (d % 8)));
    CHECK(m1[d] == doctest::Approx((2 * kPi / 16) * (8 + d % 8)));
  }
  // d = 8 wraps back to the d = 0 mean.
  CHECK(m0[8] == doctest::Approx(m0[0]));
}

TEST_CASE("gaussian-means data is balanced with the right moments") {
  auto ds = data::gen_gaussian_means(6, 2000, 0.8, 17);
  REQUIRE(ds.size() == 2000u);
  CHECK(ds.dim == 6);
  std::size_t ones = 0;
  std::vector<double> mean0(6, 0.0);
  for (const auto& s : ds.samples) {
    if (s.label == 1.0) ++ones;
    else
      for (int d = 0; d < 6; ++d) mean0[d] += s.features[d];
  }
  CHECK(ones == 1000u);
  auto want = data::class_means(6, 0);
  for (int d = 0; d < 6; ++d)
    CHECK(std::abs(mean0[d] / 1000 - want[d]) < 0.12);
  CHECK(std::abs(data::effective_variance(ds) - 0.8) < 0.35);

  CHECK_THROWS_AS(data::gen_gaussian_means(6, 11, 0.8, 17),
                  std::invalid_argument);
  // Determinism in the seed.
  auto ds2 = data::gen_gaussian_means(6, 10, 0.8, 17);
  auto ds3 = data::gen_gaussian_means(6, 10, 0.8, 17);
  CHECK(ds2.samples[3].features == ds3.samples[3].features);
}

TEST_CASE("linearly separable data respects the margin predicate") {
  const double margin = 0.3;
  auto ds = data::gen_linsep(5, 200, margin, 21);
  std::size_t ones = 0;
  for (const auto& s : ds.samples) {
    double sum = 0;
    for (double v : s.features) {
      sum += v;
      CHECK(v >= -kPi / 2);
      CHECK(v <= kPi / 2);
    }
    if (s.label == 0.0) CHECK(sum > margin * 5);
    else {
      CHECK(sum < -margin * 5);
      ++ones;
    }
  }
  CHECK(ones == 100u);
  CHECK_THROWS_AS(data::gen_linsep(5, 10, kPi / 2, 21), std::invalid_argument);
}

TEST_CASE("regression targets follow the tanh link") {
  auto ds = data::gen_regression(4, 50, 33);
  for (const auto& s : ds.samples) {
    double sum = 0;
    for (double v : s.features) {
      sum += v;
      CHECK(std::abs(v) <= 1.0);
    }
    CHECK(s.label == doctest::Approx((1 + std::tanh(sum)) / 2).epsilon(1e-12));
  }
}

TEST_CASE("correlated covariance has one dominant direction") {
  auto cov = data::correlated_covariance(24);
  CHECK(cov(0, 0) == doctest::Approx(0.8));
  CHECK(cov(0, 1) == doctest::Approx(0.792));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  // 0.8 + 23 * 0.792 = 19.016 and 0.8 - 0.792 = 0.008, exactly.
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(19.016).epsilon(1e-12));
  CHECK(es.eigenvalues().minCoeff() == doctest::Approx(0.008).epsilon(1e-9));

  auto ds = data::gen_correlated(24, 4000, 55);
  REQUIRE(ds.size() == 4000u);
  // Sample variance along the all-ones direction should be near 19.016.
  double m = 0, m2 = 0;
  for (const auto& s : ds.samples) {
    double proj = 0;
    for (double v : s.features) proj += v;
    proj /= std::sqrt(24.0);
    m += proj;
    m2 += proj * proj;
  }
  m /= ds.size();
  double var = m2 / ds.size() - m * m;
  CHECK(std::abs(var - 19.016) < 1.5);
}

TEST_CASE("quantization truncates mod 2pi to q fractional bits") {
  std::vector<double> x = {kPi};
  auto r = data::quantize(x, 4);
  CHECK(r.values[0] == 3.125);
  CHECK(r.max_err == doctest::Approx(0.016592653589793238).epsilon(1e-12));
  CHECK(r.max_err <= std::ldexp(1.0, -4));

  // Negative values reduce into [0, 2pi) first.
  std::vector<double> neg = {-kPi / 2};
  auto rn = data::quantize(neg, 8);
  CHECK(rn.values[0] >= 0.0);
  CHECK(std::abs(rn.values[0] - 3 * kPi / 2) <= std::ldexp(1.0, -8));

  // Grid membership: value * 2^q is an integer.
  std::vector<double> many;
  for (int i = 0; i < 50; ++i) many.push_back(0.37 * i - 7.0);
  auto rm = data::quantize(many, 6);
  for (double v : rm.values) {
    double scaled = v * 64.0;
    CHECK(scaled == doctest::Approx(std::floor(scaled + 0.5)).epsilon(1e-12));
  }
  CHECK(rm.max_err <= std::ldexp(1.0, -6));
}

TEST_CASE("quantization budget arithmetic") {
  // ceil(log2(3*8*8*1 / 0.01)) = ceil(14.2288) = 15.
  CHECK(data::approx_qubits_needed(1, 8, 8, 0.01) == 15);
  CHECK(data::approx_qubits_needed(1, 1, 1, 8.0) == 0);  // floored at zero
  CHECK(data::approx_error_bound(1, 8, 8, 4) == doctest::Approx(12.0));
  CHECK(data::approx_error_bound(2, 3, 2, 10) ==
        doctest::Approx(36.0 / 1024.0));
  // Round trip: the bound at the suggested q is within delta.
  int q = data::approx_qubits_needed(2, 4, 3, 0.05);
  CHECK(data::approx_error_bound(2, 4, 3, q) <= 0.05);
  CHECK(data::approx_error_bound(2, 4, 3, q - 1) > 0.05);
}

TEST_CASE("dataset csv round trips bit-exactly") {
  auto ds = data::gen_gaussian_means(4, 20, 0.8, 99);
  std::stringstream ss;
  data::write_dataset_csv(ss, ds);
  std::string text = ss.str();
  CHECK(text.substr(0, 15) == "f0,f1,f2,f3,lab");
  CHECK(text.find('\r') == std::string::npos);

  auto back = data::read_dataset_csv(ss);
  REQUIRE(back.size() == ds.size());
  CHECK(back.dim == ds.dim);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(back.samples[i].features == ds.samples[i].features);
    CHECK(back.samples[i].label == ds.samples[i].label);
  }

  // CRLF input is tolerated; a wrong header is not.
  std::stringstream crlf("f0,label\r\n0.5,1\r\n");
  auto small = data::read_dataset_csv(crlf);
  CHECK(small.dim == 1);
  CHECK(small.samples[0].label == 1.0);
  std::stringstream bad("x0,label\n0.5,1\n");
  CHECK_THROWS(data::read_dataset_csv(bad));
  std::stringstream ragged("f0,f1,label\n0.5,1\n");
  CHECK_THROWS(data::read_dataset_csv(ragged));
}

TEST_CASE("idx loader filters labels and downsamples") {
  auto img_path = tmp_file("reupload_test_imgs.idx");
  auto lbl_path = tmp_file("reupload_test_lbls.idx");
  {
    std::ofstream img(img_path, std::ios::binary);
    put_u32be(img, 0x803);
    put_u32be(img, 4);   // count
    put_u32be(img, 28);  // rows
    put_u32be(img, 28);
    for (int i = 0; i < 4; ++i) {
      std::vector<char> px(28 * 28, char(i * 60));  // constant image
      img.write(px.data(), px.size());
    }
    std::ofstream lbl(lbl_path, std::ios::binary);
    put_u32be(lbl, 0x801);
    put_u32be(lbl, 4);
    char labels[4] = {0, 1, 7, 1};
    lbl.write(labels, 4);
  }
  auto ds = data::load_idx_images(img_path.string(), lbl_path.string(), 12);
  REQUIRE(ds.size() == 3u);  // the label-7 image is dropped
  CHECK(ds.dim == 144);
  CHECK(ds.samples[0].label == 0.0);
  CHECK(ds.samples[1].label == 1.0);
  // Block means of a constant image stay constant; pixel 60 -> 60*pi/255.
  for (double v : ds.samples[1].features)
    CHECK(v == doctest::Approx(60.0 * kPi / 255.0).epsilon(1e-12));
  for (double v : ds.samples[0].features) CHECK(v == 0.0);

  // Mismatched counts and a bad magic both fail loudly.
  {
    std::ofstream lbl(lbl_path, std::ios::binary);
    put_u32be(lbl, 0x801);
    put_u32be(lbl, 3);
    char labels[3] = {0, 1, 1};
    lbl.write(labels, 3);
  }
  CHECK_THROWS(data::load_idx_images(img_path.string(), lbl_path.string()));
  {
    std::ofstream img(img_path, std::ios::binary);
    put_u32be(img, 0x1234);
  }
  CHECK_THROWS(data::load_idx_images(img_path.string(), lbl_path.string()));
  std::filesystem::remove(img_path);
  std::filesystem::remove(lbl_path);
}
