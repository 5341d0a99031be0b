#include "config.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace reupload::tools {

namespace {

using json = nlohmann::json;

[[noreturn]] void unknown_key(const std::string& path) {
  throw std::invalid_argument("unknown config key at " + path);
}

void apply_train(model::TrainConfig& tc, const json& doc,
                 const std::string& prefix) {
  for (const auto& [key, value] : doc.items()) {
    const std::string path = prefix + "/" + key;
    if (key == "learning_rate") {
      tc.learning_rate = value.get<double>();
    } else if (key == "epochs") {
      tc.epochs = value.get<int>();
    } else if (key == "batch_size") {
      tc.batch_size = value.get<int>();
    } else if (key == "seed") {
      tc.seed = value.get<std::uint64_t>();
    } else if (key == "loss") {
      const auto loss = value.get<std::string>();
      if (loss == "cross_entropy") {
        tc.loss = model::Loss::cross_entropy;
      } else if (loss == "mse") {
        tc.loss = model::Loss::mse;
      } else {
        throw std::invalid_argument("unknown loss '" + loss + "' at " + path);
      }
    } else if (key == "adam_beta1") {
      tc.adam_beta1 = value.get<double>();
    } else if (key == "adam_beta2") {
      tc.adam_beta2 = value.get<double>();
    } else if (key == "adam_eps") {
      tc.adam_eps = value.get<double>();
    } else if (key == "prob_clip") {
      tc.prob_clip = value.get<double>();
    } else {
      unknown_key(path);
    }
  }
}

}  // namespace

void apply_config_file(lab::ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument(path + ": config root must be an object");
  }

  for (const auto& [key, value] : doc.items()) {
    const std::string where = "/" + key;
    if (key == "id") {
      cfg.id = value.get<std::string>();
    } else if (key == "n_grid") {
      cfg.n_grid = value.get<std::vector<int>>();
    } else if (key == "l_grid") {
      cfg.l_grid = value.get<std::vector<int>>();
    } else if (key == "p_grid") {
      cfg.p_grid = value.get<std::vector<int>>();
    } else if (key == "size_grid") {
      cfg.size_grid = value.get<std::vector<std::size_t>>();
    } else if (key == "q_grid") {
      cfg.q_grid = value.get<std::vector<int>>();
    } else if (key == "seeds") {
      cfg.seeds = value.get<std::vector<std::uint64_t>>();
    } else if (key == "train") {
      if (!value.is_object()) {
        throw std::invalid_argument(path + ": /train must be an object");
      }
      apply_train(cfg.train, value, "/train");
    } else if (key == "sigma2") {
      cfg.sigma2 = value.get<double>();
    } else if (key == "margin") {
      cfg.margin = value.get<double>();
    } else if (key == "train_size") {
      cfg.train_size = value.get<std::size_t>();
    } else if (key == "test_size") {
      cfg.test_size = value.get<std::size_t>();
    } else if (key == "mc_samples") {
      cfg.mc_samples = value.get<std::size_t>();
    } else if (key == "eps") {
      cfg.eps = value.get<double>();
    } else if (key == "jobs") {
      cfg.jobs = value.get<int>();
    } else {
      unknown_key(where);
    }
  }
}

}  // namespace reupload::tools
