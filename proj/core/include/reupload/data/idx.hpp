#pragma once

#include <string>

#include "reupload/data/dataset.hpp"

namespace reupload::data {

// Loads big-endian IDX image/label files (magic 0x803 / 0x801), keeps the
// samples labeled 0 or 1, block-mean downsamples each image to
// downsample_to x downsample_to, and maps pixel values linearly from
// [0, 255] to [0, angle_scale] radians.
Dataset load_idx_images(const std::string& images_path,
                        const std::string& labels_path, int downsample_to = 12,
                        double angle_scale = 3.14159265358979323846);

}  // namespace reupload::data
