// Copyright 2026 The qaem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qaem: run experiments, train encoders, mitigate single states, and
// reproduce the named figure datasets.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
// Results are written write-then-rename, so a failing run leaves no partial
// files in the output directory.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaem/ansatz.hpp"
#include "qaem/encoder.hpp"
#include "qaem/errors.hpp"
#include "qaem/harness.hpp"
#include "qaem/io.hpp"
#include "qaem/mitigation.hpp"
#include "qaem/noise.hpp"
#include "qaem/training.hpp"
#include "qaem/version.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  bool trials_set = false;
  bool quiet = false;
  int threads = 1;
};

std::string default_out_dir() {
  const char* env = std::getenv("QAEM_OUT_DIR");
  return (env != nullptr && *env != '\0') ? std::string(env) : std::string(".");
}

void write_outputs(const std::string& out_dir,
                   const std::map<std::string, std::string>& files,
                   bool quiet) {
  fs::create_directories(out_dir);
  for (const auto& [name, body] : files) {
    const fs::path path = fs::path(out_dir) / name;
    qaem::atomic_write(path.string(), body);
    if (!quiet) std::cout << "wrote " << path.string() << "\n";
  }
}

qaem::NoiseModel model_by_name(const std::string& name) {
  if (name == "global_depolarizing") {
    return qaem::NoiseModel::global_depolarizing();
  }
  if (name == "local_depolarizing") {
    return qaem::NoiseModel::local_depolarizing();
  }
  if (name == "leakage") return qaem::NoiseModel::leakage();
  qaem::raise(qaem::Errc::bad_config, "unknown noise model: " + name);
}

Json parse_json_config(const std::string& path) {
  const std::string body = qaem::read_file(path);
  try {
    Json j = Json::parse(body);
    qaem::require(j.is_object(), qaem::Errc::bad_config,
                  "configuration must be a JSON object");
    return j;
  } catch (const qaem::Error&) {
    throw;
  } catch (const std::exception& e) {
    qaem::raise(qaem::Errc::bad_config,
                std::string("configuration is not valid JSON: ") + e.what());
  }
}

int run_experiment_to_dir(qaem::ExperimentConfig config,
                          const CommonOpts& opts) {
  if (opts.seed_set) config.seed = opts.seed;
  if (opts.trials_set) config.trials = opts.trials;
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  qaem::RunOutput out = qaem::run_experiment(config);
  const double wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::map<std::string, std::string> files = std::move(out.artifacts);
  files[config.id + ".csv"] = qaem::emit_report(out.records);
  files[config.id + "-manifest.json"] =
      qaem::manifest_json(config, wall_seconds);
  write_outputs(opts.out_dir, files, opts.quiet);
  return 0;
}

int cmd_sweep(const CommonOpts& opts) {
  const qaem::ExperimentConfig config =
      qaem::config_from_json(qaem::read_file(opts.config_path));
  return run_experiment_to_dir(config, opts);
}

int cmd_reproduce(const std::string& figure_id, const CommonOpts& opts) {
  return run_experiment_to_dir(qaem::figure_config(figure_id), opts);
}

// Training run description:
//   {"family": "w"|"h2", "n": 4, "noise": "global_depolarizing",
//    "eps": 0.1, "layers": 1, "stages": 2, "seed": 1, "id": "train-w4"}
// All keys optional except family-specific constraints; unknown keys are
// rejected.
int cmd_train(const CommonOpts& opts) {
  const Json j = parse_json_config(opts.config_path);
  std::string family = "w";
  std::string noise = "global_depolarizing";
  std::string id = "train";
  int n = 4;
  double eps = 0.1;
  int layers = 1;
  int stages = 2;
  uint64_t seed = 1;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "family") {
        family = value.get<std::string>();
      } else if (key == "n") {
        n = value.get<int>();
      } else if (key == "noise") {
        noise = value.get<std::string>();
      } else if (key == "eps") {
        eps = value.get<double>();
      } else if (key == "layers") {
        layers = value.get<int>();
      } else if (key == "stages") {
        stages = value.get<int>();
      } else if (key == "seed") {
        seed = value.get<uint64_t>();
      } else if (key == "id") {
        id = value.get<std::string>();
      } else {
        qaem::raise(qaem::Errc::bad_config,
                    "unknown configuration key: " + key);
      }
    }
  } catch (const qaem::Error&) {
    throw;
  } catch (const std::exception& e) {
    qaem::raise(qaem::Errc::bad_config,
                std::string("bad configuration value: ") + e.what());
  }
  if (opts.seed_set) seed = opts.seed;
  qaem::require(family == "w" || family == "h2", qaem::Errc::bad_config,
                "family must be \"w\" or \"h2\"");
  qaem::require(family != "h2" || n == 4, qaem::Errc::bad_config,
                "the molecular family is defined on 4 qubits");
  qaem::require(stages == 1 || stages == 2, qaem::Errc::bad_config,
                "stage count must be 1 or 2");
  qaem::require(layers >= 1, qaem::Errc::bad_config,
                "layer count must be at least 1");
  qaem::require(eps >= 0.0 && eps <= 1.0, qaem::Errc::bad_config,
                "error rate outside [0, 1]");

  const std::vector<qaem::DensityMatrix> basis =
      family == "h2" ? qaem::h2_training_states()
                     : qaem::w_training_states(n);
  const qaem::NoiseModel model = model_by_name(noise);
  const qaem::HilbertSpace space = qaem::HilbertSpace::qubits(n);
  int latent_rank_log = 0;
  while ((1 << latent_rank_log) < static_cast<int>(basis.size())) {
    ++latent_rank_log;
  }
  const int ancilla_final = n - latent_rank_log;
  qaem::require(ancilla_final >= stages, qaem::Errc::bad_config,
                "not enough compressible qubits for the stage count");

  const qaem::TrainingSet data = qaem::TrainingSet::noisy(basis, model, eps);
  qaem::LayeredAnsatz ansatz(n, layers, stages);
  std::vector<qaem::CostSpec> costs;
  for (int s = 1; s <= stages; ++s) {
    costs.push_back(qaem::CostSpec::junk_weight(
        qaem::latent_projector(space, ancilla_final - stages + s).second));
  }
  qaem::StageConfig stage_config;
  stage_config.seed = seed;
  const qaem::MultiStageResult result = qaem::train_multistage(
      ansatz, data, costs, qaem::latent_projector(space, ancilla_final).first,
      stage_config);

  qaem::CsvWriter csv({"stage", "restarts", "iterations", "converged",
                       "initial_cost", "final_cost"});
  for (const qaem::TrainRecord& r : result.stages) {
    csv.add_row({std::to_string(r.stage), std::to_string(r.restarts_used),
                 std::to_string(r.iterations), r.converged ? "1" : "0",
                 qaem::fmt_cell(r.initial_cost),
                 qaem::fmt_cell(r.final_cost)});
  }
  std::map<std::string, std::string> files;
  files[id + "-params.txt"] = qaem::params_to_text(result.theta);
  files[id + "-pipeline.txt"] = qaem::pipeline_to_text(result.pipeline);
  files[id + "-training.csv"] = csv.to_string();
  write_outputs(opts.out_dir, files, opts.quiet);
  if (!opts.quiet) {
    for (const qaem::TrainRecord& r : result.stages) {
      std::cout << "stage " << r.stage << ": cost " << r.initial_cost
                << " -> " << r.final_cost << " in " << r.iterations
                << " iterations\n";
    }
  }
  return 0;
}

// Mitigation of one serialized state:
//   {"state": "state.txt", "pipeline": "pipeline.txt",
//    "ideal": "ideal.txt", "noise": "global_depolarizing", "eps": 0.05}
// `state` and `pipeline` are required. With `noise`/`eps`, the loaded state
// is treated as the ideal input and the channel is applied before
// mitigation; otherwise the state is taken as already noisy and `ideal`
// provides the reference. Infidelities are printed only when a reference is
// available.
int cmd_mitigate(const CommonOpts& opts) {
  const Json j = parse_json_config(opts.config_path);
  std::string state_path;
  std::string pipeline_path;
  std::string ideal_path;
  std::string noise;
  std::optional<double> eps;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "state") {
        state_path = value.get<std::string>();
      } else if (key == "pipeline") {
        pipeline_path = value.get<std::string>();
      } else if (key == "ideal") {
        ideal_path = value.get<std::string>();
      } else if (key == "noise") {
        noise = value.get<std::string>();
      } else if (key == "eps") {
        eps = value.get<double>();
      } else {
        qaem::raise(qaem::Errc::bad_config,
                    "unknown configuration key: " + key);
      }
    }
  } catch (const qaem::Error&) {
    throw;
  } catch (const std::exception& e) {
    qaem::raise(qaem::Errc::bad_config,
                std::string("bad configuration value: ") + e.what());
  }
  qaem::require(!state_path.empty(), qaem::Errc::bad_config,
                "missing \"state\" path");
  qaem::require(!pipeline_path.empty(), qaem::Errc::bad_config,
                "missing \"pipeline\" path");
  qaem::require(noise.empty() == !eps.has_value(), qaem::Errc::bad_config,
                "\"noise\" and \"eps\" must be given together");

  const qaem::DensityMatrix loaded =
      qaem::state_from_text(qaem::read_file(state_path));
  const qaem::EncoderPipeline pipeline =
      qaem::pipeline_from_text(qaem::read_file(pipeline_path));

  std::optional<qaem::DensityMatrix> ideal;
  qaem::DensityMatrix noisy = loaded;
  if (!noise.empty()) {
    ideal = loaded;
    noisy = qaem::apply_noise(loaded, model_by_name(noise), *eps);
  }
  if (!ideal_path.empty()) {
    ideal = qaem::state_from_text(qaem::read_file(ideal_path));
  }

  const qaem::MitigationOutcome outcome = qaem::mitigate(noisy, pipeline);
  if (ideal.has_value()) {
    std::cout << "uncorrected_infidelity="
              << qaem::fmt_cell(qaem::infidelity(*ideal, noisy)) << "\n";
    std::cout << "corrected_infidelity="
              << qaem::fmt_cell(qaem::infidelity(*ideal, outcome.corrected))
              << "\n";
  }
  std::cout << "keep_probability=" << qaem::fmt_cell(outcome.keep_probability)
            << "\n";
  std::cout << "junk_weight=" << qaem::fmt_cell(outcome.junk_weight) << "\n";
  return 0;
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_config,
                      bool config_required, bool with_out, bool with_trials) {
  if (with_config) {
    CLI::Option* config =
        cmd->add_option("--config", opts.config_path,
                        "JSON configuration file")
            ->check(CLI::ExistingFile);
    if (config_required) config->required();
  }
  if (with_out) {
    cmd->add_option("--out", opts.out_dir,
                    "output directory (default: $QAEM_OUT_DIR or .)");
  }
  cmd->add_option_function<uint64_t>(
         "--seed", [&opts](const uint64_t& v) {
           opts.seed = v;
           opts.seed_set = true;
         },
         "master seed override");
  if (with_trials) {
    cmd->add_option_function<int>(
           "--trials", [&opts](const int& v) {
             opts.trials = v;
             opts.trials_set = true;
           },
           "trial-count override")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_flag("--quiet", opts.quiet, "suppress progress output");
  cmd->add_option("--threads", opts.threads,
                  "worker threads for per-trial parallelism")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detection-based quantum-autoencoder error mitigation"};
  app.set_version_flag("--version", qaem::kVersion);
  app.require_subcommand(1);

  CommonOpts opts;
  opts.out_dir = default_out_dir();

  CLI::App* train =
      app.add_subcommand("train", "train an encoder and save its artifacts");
  add_common_flags(train, opts, true, true, true, false);

  CLI::App* mitigate = app.add_subcommand(
      "mitigate", "mitigate one serialized state through a pipeline");
  add_common_flags(mitigate, opts, true, true, false, false);

  CLI::App* sweep =
      app.add_subcommand("sweep", "run an experiment configuration");
  add_common_flags(sweep, opts, true, true, true, true);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "regenerate a named figure dataset");
  std::string figure_id;
  reproduce
      ->add_option("figure", figure_id,
                   "figure id (see `reproduce --list`)")
      ->required(false);
  bool list_figures = false;
  reproduce->add_flag("--list", list_figures, "list known figure ids");
  add_common_flags(reproduce, opts, false, false, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    qaem::set_thread_count(opts.threads);
    if (*train) return cmd_train(opts);
    if (*mitigate) return cmd_mitigate(opts);
    if (*sweep) return cmd_sweep(opts);
    if (*reproduce) {
      if (list_figures) {
        for (const std::string& id : qaem::figure_ids()) {
          std::cout << id << "\n";
        }
        return 0;
      }
      qaem::require(!figure_id.empty(), qaem::Errc::bad_config,
                    "missing figure id");
      return cmd_reproduce(figure_id, opts);
    }
    return 2;
  } catch (const qaem::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == qaem::Errc::bad_config ||
            e.code() == qaem::Errc::bad_kind)
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
