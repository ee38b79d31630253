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

#ifndef SRGT_REPORT_HPP_
#define SRGT_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "srgt/io.hpp"
#include "srgt/simplex_opt.hpp"

namespace srgt {

struct AnalyzeOptions {
  bool mixed = false;   // run the mixed-strategy superrational solver
  bool nash2p = false;  // run 2-player mixed Nash support enumeration
  OptimizerConfig config;
};

struct TypesOptions {
  bool weak = false;  // include weak superrational-state verdicts (bk)
  OptimizerConfig config;
};

// Structured reports. Serialization of the returned document is byte-stable
// for fixed inputs and options: every collection is emitted in a fixed
// order and no timestamps or addresses appear.
nlohmann::ordered_json run_analyze(const Game& game,
                                   const AnalyzeOptions& options,
                                   const std::string& input_name);

nlohmann::ordered_json run_types(const TypeSpaceFile& file,
                                 const std::optional<Assignment>& assignment,
                                 const TypesOptions& options,
                                 const std::string& input_name);

// Plain-text rendering of a report document.
std::string render_table(const nlohmann::ordered_json& report);

}  // namespace srgt

#endif  // SRGT_REPORT_HPP_
