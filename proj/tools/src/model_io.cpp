#include "model_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace reupload::tools {

using json = nlohmann::ordered_json;

void save_model(const std::string& path, const model::Hypothesis& h) {
  json doc;
  doc["n_qubits"] = h.spec.n_qubits;
  doc["encoding_layers"] = h.spec.encoding_layers;
  doc["total_layers"] = h.spec.total_layers;
  doc["repetitions"] = h.spec.repetitions;
  doc["entangler"] =
      h.spec.entangler == model::Entangler::ring_cnot ? "ring_cnot" : "none";
  doc["task"] =
      h.task == model::Task::classification ? "classification" : "regression";
  doc["theta"] = h.theta.values;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

model::Hypothesis load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }

  static const char* const kKeys[] = {"n_qubits",    "encoding_layers",
                                      "total_layers", "repetitions",
                                      "entangler",    "task",
                                      "theta"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) {
          return key == k;
        }) == std::end(kKeys)) {
      throw std::invalid_argument(path + ": unknown model key '" + key + "'");
    }
  }
  for (const char* k : kKeys) {
    if (!doc.contains(k)) {
      throw std::invalid_argument(path + ": missing model key '" +
                                  std::string(k) + "'");
    }
  }

  model::Hypothesis h;
  h.spec.n_qubits = doc["n_qubits"].get<int>();
  h.spec.encoding_layers = doc["encoding_layers"].get<int>();
  h.spec.total_layers = doc["total_layers"].get<int>();
  h.spec.repetitions = doc["repetitions"].get<int>();
  const auto ent = doc["entangler"].get<std::string>();
  if (ent == "ring_cnot") {
    h.spec.entangler = model::Entangler::ring_cnot;
  } else if (ent == "none") {
    h.spec.entangler = model::Entangler::none;
  } else {
    throw std::invalid_argument(path + ": unknown entangler '" + ent + "'");
  }
  const auto task = doc["task"].get<std::string>();
  if (task == "classification") {
    h.task = model::Task::classification;
  } else if (task == "regression") {
    h.task = model::Task::regression;
  } else {
    throw std::invalid_argument(path + ": unknown task '" + task + "'");
  }
  h.spec.validate();

  h.theta = model::ParameterTensor(h.spec.repetitions, h.spec.total_layers,
                                   h.spec.n_qubits);
  const auto values = doc["theta"].get<std::vector<double>>();
  if (values.size() != h.theta.size()) {
    throw std::invalid_argument(path + ": theta length does not match shape");
  }
  h.theta.values = values;
  return h;
}

}  // namespace reupload::tools
