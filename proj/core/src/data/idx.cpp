#include "reupload/data/idx.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace reupload::data {

namespace {

std::uint32_t read_u32_be(std::istream& in, const std::string& path) {
  unsigned char buf[4];
  in.read(reinterpret_cast<char*>(buf), 4);
  if (!in) throw std::runtime_error("truncated IDX file: " + path);
  return (std::uint32_t{buf[0]} << 24) | (std::uint32_t{buf[1]} << 16) |
         (std::uint32_t{buf[2]} << 8) | std::uint32_t{buf[3]};
}

std::vector<unsigned char> read_bytes(std::istream& in, std::size_t count,
                                      const std::string& path) {
  std::vector<unsigned char> bytes(count);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(count));
  if (!in) throw std::runtime_error("truncated IDX file: " + path);
  return bytes;
}

// Area-average resampling: each output cell averages the (possibly
// fractional) input region it covers, so 28x28 -> 12x12 works exactly.
std::vector<double> downsample(const unsigned char* pixels, int rows, int cols,
                               int out) {
  std::vector<double> result(static_cast<std::size_t>(out) * out, 0.0);
  const double ry = static_cast<double>(rows) / out;
  const double rx = static_cast<double>(cols) / out;
  for (int oy = 0; oy < out; ++oy) {
    const double y0 = oy * ry, y1 = (oy + 1) * ry;
    for (int ox = 0; ox < out; ++ox) {
      const double x0 = ox * rx, x1 = (ox + 1) * rx;
      double acc = 0.0;
      for (int iy = static_cast<int>(y0); iy < rows && iy < y1; ++iy) {
        const double wy =
            std::min<double>(iy + 1, y1) - std::max<double>(iy, y0);
        for (int ix = static_cast<int>(x0); ix < cols && ix < x1; ++ix) {
          const double wx =
              std::min<double>(ix + 1, x1) - std::max<double>(ix, x0);
          acc += wy * wx * pixels[iy * cols + ix];
        }
      }
      result[static_cast<std::size_t>(oy) * out + ox] = acc / (ry * rx);
    }
  }
  return result;
}

}  // namespace

Dataset load_idx_images(const std::string& images_path,
                        const std::string& labels_path, int downsample_to,
                        double angle_scale) {
  if (downsample_to < 1) {
    throw std::invalid_argument("downsample size must be >= 1");
  }
  std::ifstream images(images_path, std::ios::binary);
  if (!images) throw std::runtime_error("cannot open " + images_path);
  std::ifstream labels(labels_path, std::ios::binary);
  if (!labels) throw std::runtime_error("cannot open " + labels_path);

  if (read_u32_be(images, images_path) != 0x803u) {
    throw std::runtime_error("bad IDX image magic in " + images_path);
  }
  const std::uint32_t n_images = read_u32_be(images, images_path);
  const std::uint32_t rows = read_u32_be(images, images_path);
  const std::uint32_t cols = read_u32_be(images, images_path);

  if (read_u32_be(labels, labels_path) != 0x801u) {
    throw std::runtime_error("bad IDX label magic in " + labels_path);
  }
  const std::uint32_t n_labels = read_u32_be(labels, labels_path);
  if (n_images != n_labels) {
    throw std::runtime_error("image/label count mismatch between " +
                             images_path + " and " + labels_path);
  }

  const std::size_t pixels_per_image =
      static_cast<std::size_t>(rows) * cols;
  const auto label_bytes = read_bytes(labels, n_labels, labels_path);

  Dataset ds;
  ds.dim = downsample_to * downsample_to;
  for (std::uint32_t i = 0; i < n_images; ++i) {
    const auto pixels = read_bytes(images, pixels_per_image, images_path);
    const unsigned char label = label_bytes[i];
    if (label > 1) continue;  // binary task: keep digits 0 and 1 only
    Sample s;
    s.label = label;
    s.features = downsample(pixels.data(), static_cast<int>(rows),
                            static_cast<int>(cols), downsample_to);
    for (double& f : s.features) f *= angle_scale / 255.0;
    ds.samples.push_back(std::move(s));
  }
  return ds;
}

}  // namespace reupload::data
