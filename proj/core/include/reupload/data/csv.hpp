#pragma once

#include <iosfwd>
#include <string>

#include "reupload/data/dataset.hpp"

namespace reupload::data {

// Header `f0,...,f{D-1},label`, LF line endings, values with enough digits
// to round-trip exactly.
void write_dataset_csv(std::ostream& out, const Dataset& ds);
void write_dataset_csv(const std::string& path, const Dataset& ds);

Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv(const std::string& path);

}  // namespace reupload::data
