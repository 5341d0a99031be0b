#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "model_io.hpp"
#include "plot.hpp"
#include "reupload/data/csv.hpp"
#include "reupload/data/generators.hpp"
#include "reupload/data/quantize.hpp"
#include "reupload/lab/experiments.hpp"
#include "reupload/pauli/bounds.hpp"

namespace {

namespace fs = std::filesystem;
using namespace reupload;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("REUPLOAD_LAB_SEED")) {
    return std::stoull(env);
  }
  return 1;
}

int cmd_gen(const std::string& kind, int dim, std::size_t size,
            std::uint64_t seed, double sigma2, double margin,
            const std::string& out_path) {
  data::Dataset ds;
  if (kind == "gaussian_means") {
    ds = data::gen_gaussian_means(dim, size, sigma2, seed);
  } else if (kind == "linsep") {
    ds = data::gen_linsep(dim, size, margin, seed);
  } else if (kind == "regression") {
    ds = data::gen_regression(dim, size, seed);
  } else if (kind == "correlated") {
    ds = data::gen_correlated(dim, size, seed);
  } else {
    throw std::invalid_argument("unknown dataset kind '" + kind + "'");
  }
  data::write_dataset_csv(out_path, ds);
  std::size_t class0 = 0;
  for (const auto& s : ds.samples) {
    if (s.label < 0.5) ++class0;
  }
  std::cout << "wrote " << ds.size() << " rows to " << out_path;
  if (kind != "regression") {
    std::cout << " (" << class0 << "/" << ds.size() - class0 << " balance)";
  }
  std::cout << '\n';
  return 0;
}

int cmd_bounds(int n, double sigma2, int l, double eps) {
  if (l >= 0) {
    std::cout << "divergence_bound(N=" << n << ", L=" << l
              << ", sigma2=" << sigma2
              << ") = " << pauli::divergence_bound(n, l, sigma2) << '\n';
  }
  if (eps > 0.0) {
    std::cout << "layer_threshold(N=" << n << ", sigma2=" << sigma2
              << ", eps=" << eps
              << ") = " << pauli::layer_threshold(n, sigma2, eps) << '\n';
  }
  if (l < 0 && eps <= 0.0) {
    throw std::invalid_argument("bounds needs --l and/or --eps");
  }
  return 0;
}

model::Hypothesis make_hypothesis(int n, int l, int lmax, int p,
                                  const std::string& entangler,
                                  const std::string& task) {
  model::Hypothesis h;
  h.spec.n_qubits = n;
  h.spec.encoding_layers = l;
  h.spec.total_layers = lmax > 0 ? lmax : l;
  h.spec.repetitions = p;
  if (entangler == "ring_cnot") {
    h.spec.entangler = model::Entangler::ring_cnot;
  } else if (entangler == "none") {
    h.spec.entangler = model::Entangler::none;
  } else {
    throw std::invalid_argument("unknown entangler '" + entangler + "'");
  }
  if (task == "classification") {
    h.task = model::Task::classification;
  } else if (task == "regression") {
    h.task = model::Task::regression;
  } else {
    throw std::invalid_argument("unknown task '" + task + "'");
  }
  h.spec.validate();
  return h;
}

void print_metrics(const model::Hypothesis& h, const data::Dataset& ds,
                   const char* label) {
  std::cout << label << "_error " << model::empirical_error(h, ds) << '\n';
  if (h.task == model::Task::classification) {
    std::cout << label << "_accuracy " << model::accuracy(h, ds) << '\n';
  }
  std::cout << label << "_h_gap " << model::hypothesis_gap(h, ds) << '\n';
}

int cmd_train(const std::string& data_path, model::Hypothesis proto,
              model::TrainConfig tc, const std::string& out_path) {
  const auto ds = data::read_dataset_csv(data_path);
  const auto res = model::train(ds, proto.spec, proto.task, tc);
  tools::save_model(out_path, res.hypothesis);
  std::cout << "best_epoch " << res.best_epoch << '\n';
  std::cout << "train_error " << res.best_error << '\n';
  std::cout << "model " << out_path << '\n';
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& data_path) {
  const auto h = tools::load_model(model_path);
  const auto ds = data::read_dataset_csv(data_path);
  print_metrics(h, ds, "eval");
  return 0;
}

int cmd_experiment(const std::string& id, const std::string& profile,
                   const std::string& config_path, int jobs,
                   const std::string& out_dir) {
  auto cfg = lab::default_config(id, profile);
  if (!config_path.empty()) tools::apply_config_file(cfg, config_path);
  if (jobs > 0) cfg.jobs = jobs;
  cfg.validate();

  const auto records = lab::run_experiment(cfg);
  fs::create_directories(out_dir);
  const auto csv_path = (fs::path(out_dir) / (id + ".csv")).string();
  const auto json_path =
      (fs::path(out_dir) / (id + "_summary.json")).string();
  lab::write_records_csv(csv_path, records);
  lab::write_summary_json(json_path, records);
  std::cout << "records " << records.size() << '\n';
  std::cout << "csv " << csv_path << '\n';
  std::cout << "summary " << json_path << '\n';
  return 0;
}

int cmd_plot(const std::string& results_path, const std::string& metric,
             const std::string& x_axis, const std::string& group_by,
             bool log_y, const std::string& out_path) {
  const auto records = lab::read_records_csv(results_path);
  const auto data = tools::build_plot_data(records, metric, x_axis, group_by);
  tools::write_svg(out_path, data, log_y);
  std::cout << "plot " << out_path << '\n';
  return 0;
}

int cmd_approx_check(const std::string& profile, int jobs,
                     const std::string& out_path) {
  auto cfg = lab::default_config("approx_check", profile);
  if (jobs > 0) cfg.jobs = jobs;
  const auto records = lab::run_approx_check(cfg);
  double worst = 0.0;
  for (const auto& r : records) {
    if (r.test_error && r.bound && *r.bound > 0.0) {
      worst = std::max(worst, *r.test_error / *r.bound);
    }
  }
  if (!out_path.empty()) lab::write_records_csv(out_path, records);
  std::cout << "instances " << records.size() << '\n';
  std::cout << "worst_ratio " << worst << '\n';
  std::cout << (worst <= 1.0 ? "bound holds" : "bound violated") << '\n';
  return worst <= 1.0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data re-uploading model lab: simulation, training, and "
               "depth-bound verification"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a dataset CSV");
  std::string gen_kind = "linsep", gen_out = "dataset.csv";
  int gen_dim = 24;
  std::size_t gen_size = 600;
  std::uint64_t gen_seed = default_seed();
  double gen_sigma2 = 0.8, gen_margin = 0.3;
  gen->add_option("--kind", gen_kind,
                  "gaussian_means | linsep | regression | correlated");
  gen->add_option("--dim", gen_dim, "feature dimension");
  gen->add_option("--size", gen_size, "sample count");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--sigma2", gen_sigma2, "gaussian variance");
  gen->add_option("--margin", gen_margin, "linsep margin");
  gen->add_option("--out", gen_out, "output CSV path");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Print closed-form bounds");
  int b_n = 1, b_l = -1;
  double b_sigma2 = 0.8, b_eps = -1.0;
  bounds->add_option("--n", b_n, "qubit count");
  bounds->add_option("--sigma2", b_sigma2, "data variance");
  bounds->add_option("--l", b_l, "encoding depth for the divergence bound");
  bounds->add_option("--eps", b_eps, "epsilon for the layer threshold");

  // train
  auto* train = app.add_subcommand("train", "Train a model on a dataset CSV");
  std::string t_data, t_out = "model.json", t_entangler = "ring_cnot",
              t_task = "classification", t_loss = "cross_entropy";
  int t_n = 1, t_l = 1, t_lmax = 0, t_p = 1, t_epochs = 1000, t_batch = 200;
  double t_lr = 0.005;
  std::uint64_t t_seed = default_seed();
  train->add_option("--data", t_data, "training CSV")->required();
  train->add_option("--n", t_n, "qubit count");
  train->add_option("--l", t_l, "encoding layers");
  train->add_option("--lmax", t_lmax, "total layers (default: --l)");
  train->add_option("--p", t_p, "repetitions");
  train->add_option("--entangler", t_entangler, "ring_cnot | none");
  train->add_option("--task", t_task, "classification | regression");
  train->add_option("--loss", t_loss, "cross_entropy | mse");
  train->add_option("--epochs", t_epochs, "training epochs");
  train->add_option("--batch", t_batch, "minibatch size");
  train->add_option("--lr", t_lr, "learning rate");
  train->add_option("--seed", t_seed, "training seed");
  train->add_option("--out", t_out, "model JSON output path");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a model on a dataset CSV");
  std::string e_model, e_data;
  eval->add_option("--model", e_model, "model JSON")->required();
  eval->add_option("--data", e_data, "dataset CSV")->required();

  // experiment
  auto* experiment =
      app.add_subcommand("experiment", "Run a predefined experiment grid");
  std::string x_id, x_profile = "desk", x_config, x_out = "results";
  int x_jobs = 0;
  experiment->add_option("--id", x_id, "experiment id")->required();
  experiment->add_option("--profile", x_profile, "paper | desk | ci");
  experiment->add_option("--config", x_config, "JSON override file");
  experiment->add_option("--jobs", x_jobs, "worker threads");
  experiment->add_option("--out", x_out, "output directory");

  // plot
  auto* plot = app.add_subcommand("plot", "Render a result CSV as SVG");
  std::string p_results, p_metric = "test_error", p_x = "L", p_group = "P",
              p_out = "plot.svg";
  bool p_logy = false;
  plot->add_option("--results", p_results, "result CSV")->required();
  plot->add_option("--metric", p_metric, "metric column");
  plot->add_option("--x", p_x, "x-axis column (L, P, N, M_train)");
  plot->add_option("--group", p_group, "grouping column");
  plot->add_flag("--log-y", p_logy, "logarithmic y axis");
  plot->add_option("--out", p_out, "output SVG path");

  // approx-check
  auto* approx = app.add_subcommand(
      "approx-check", "Verify the quantized-data output bound");
  std::string a_profile = "desk", a_out;
  int a_jobs = 0;
  approx->add_option("--profile", a_profile, "paper | desk | ci");
  approx->add_option("--jobs", a_jobs, "worker threads");
  approx->add_option("--out", a_out, "optional result CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      return cmd_gen(gen_kind, gen_dim, gen_size, gen_seed, gen_sigma2,
                     gen_margin, gen_out);
    }
    if (*bounds) return cmd_bounds(b_n, b_sigma2, b_l, b_eps);
    if (*train) {
      auto proto = make_hypothesis(t_n, t_l, t_lmax, t_p, t_entangler, t_task);
      model::TrainConfig tc;
      tc.learning_rate = t_lr;
      tc.epochs = t_epochs;
      tc.batch_size = t_batch;
      tc.seed = t_seed;
      if (t_loss == "cross_entropy") {
        tc.loss = model::Loss::cross_entropy;
      } else if (t_loss == "mse") {
        tc.loss = model::Loss::mse;
      } else {
        throw std::invalid_argument("unknown loss '" + t_loss + "'");
      }
      return cmd_train(t_data, proto, tc, t_out);
    }
    if (*eval) return cmd_eval(e_model, e_data);
    if (*experiment) {
      return cmd_experiment(x_id, x_profile, x_config, x_jobs, x_out);
    }
    if (*plot) return cmd_plot(p_results, p_metric, p_x, p_group, p_logy, p_out);
    if (*approx) return cmd_approx_check(a_profile, a_jobs, a_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
