#pragma once

#include <string>

#include "reupload/model/train.hpp"

namespace reupload::tools {

// Model files are flat JSON: circuit shape, observable family, and the
// flattened parameter tensor.
void save_model(const std::string& path, const model::Hypothesis& h);
model::Hypothesis load_model(const std::string& path);

}  // namespace reupload::tools
