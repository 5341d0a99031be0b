#pragma once

#include <string>

#include "reupload/lab/experiments.hpp"

namespace reupload::tools {

// Applies a strict-schema JSON override file on top of cfg. Any key the
// schema does not know fails with its JSON path.
void apply_config_file(lab::ExperimentConfig& cfg, const std::string& path);

}  // namespace reupload::tools
