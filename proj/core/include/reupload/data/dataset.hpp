#pragma once

#include <vector>

namespace reupload::data {

// label is 0/1 for classification and a real target in [0,1] (or [-1,1])
// for regression.
struct Sample {
  std::vector<double> features;
  double label = 0.0;
};

struct Dataset {
  int dim = 0;
  std::vector<Sample> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

}  // namespace reupload::data
