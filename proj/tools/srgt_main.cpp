// Copyright 2026 The SRGT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "srgt/errors.hpp"
#include "srgt/harsanyi.hpp"
#include "srgt/io.hpp"
#include "srgt/report.hpp"

namespace {

// Exit codes: 0 success (warnings allowed), 1 internal error, 2 input error.
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

void emit(const nlohmann::ordered_json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << srgt::render_table(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superrational solver for finite normal-form games"};
  app.require_subcommand(1);

  std::string format = "table";
  srgt::OptimizerConfig config;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", config.tolerance, "optimizer tolerance");
    cmd->add_option("--grid", config.grid_points_per_dim,
                    "grid points per dimension");
    cmd->add_option("--starts", config.multistarts, "random multistarts");
    cmd->add_option("--seed", config.rng_seed, "RNG seed");
    cmd->add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  std::string analyze_path;
  srgt::AnalyzeOptions analyze_options;
  CLI::App* analyze =
      app.add_subcommand("analyze", "pure and mixed superrational analysis of"
                                    " a game file");
  analyze->add_option("file", analyze_path, "game file (JSON)")->required();
  analyze->add_flag("--mixed", analyze_options.mixed,
                    "maximize the diagonal expected payoff over the simplex");
  analyze->add_flag("--nash2p", analyze_options.nash2p,
                    "enumerate mixed Nash equilibria (2 players)");
  add_common(analyze);

  std::string types_path;
  std::string strategies_path;
  bool make_superrational = false;
  srgt::TypesOptions types_options;
  CLI::App* types =
      app.add_subcommand("types", "superrational checks on a type-space file");
  types->add_option("file", types_path,
                    "type-space file (JSON); a game file with"
                    " --make-superrational")
      ->required();
  types->add_option("--strategies", strategies_path,
                    "assignment file with strategies/types/states");
  types->add_flag("--weak", types_options.weak,
                  "also report weak superrational-state verdicts");
  types->add_flag("--make-superrational", make_superrational,
                  "build the canonical one-type space for a game file and"
                  " check it");
  add_common(types);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (analyze->parsed()) {
      analyze_options.config = config;
      const srgt::Game game = srgt::load_game(analyze_path);
      emit(srgt::run_analyze(game, analyze_options, analyze_path), format);
      return 0;
    }

    types_options.config = config;
    srgt::TypeSpaceFile file = [&] {
      if (make_superrational) {
        return srgt::TypeSpaceFile{srgt::make_superrational_space(
            srgt::load_game(types_path), srgt::BeliefMode::pure, config)};
      }
      return srgt::load_type_space(types_path);
    }();
    std::optional<srgt::Assignment> assignment;
    if (!strategies_path.empty()) {
      assignment = srgt::load_assignment(strategies_path, file);
    }
    emit(srgt::run_types(file, assignment, types_options, types_path), format);
    return 0;
  } catch (const srgt::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const srgt::ModeMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const srgt::UnknownType& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const srgt::NotAPartition& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const srgt::Error& e) {
    if (e.code() == "empty_superrational_set") {
      std::cerr << "input error: " << e.what() << "\n";
      return kExitInput;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
