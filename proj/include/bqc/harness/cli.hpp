// Copyright 2026 The bqcsim Authors
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

#pragma once

#include <iosfwd>

#include <json.hpp>

#include "bqc/harness/config.hpp"

namespace bqc::harness {

/** Runs one configured experiment; returns the stats document and writes transcripts under out_dir. */
nlohmann::json run_experiment(const RunConfig& cfg, const std::string& out_dir = "",
                              std::string* csv = nullptr);

/** bqcsim entry point. */
int run_cli(int argc, char** argv);

}  // namespace bqc::harness
